// Copyright 2026 The logspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "logspace/measure_space.hpp"

namespace logspace {

/// Explicit finite list of component measures.
struct FiniteList {
  std::vector<double> values;
  friend bool operator==(const FiniteList&, const FiniteList&) = default;
};

enum class SeqKind { kConst, kLinear, kRecip, kGeom };

/// Countable family of measures given by a rule, indexed from i = 1:
///   CONST(c)    c
///   LINEAR(a,b) a*i + b   (a > 0)
///   RECIP(a)    a / i
///   GEOM(a,r)   a * r^i
class ClosedForm {
 public:
  /// Throws unless the parameter count matches and every term is positive.
  ClosedForm(SeqKind kind, std::vector<double> params);

  SeqKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }

  double term(long i) const;
  /// log(term(i)), computed without overflow.
  double log_term(long i) const;

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

 private:
  SeqKind kind_;
  std::vector<double> params_;
};

using MeasureSeq = std::variant<FiniteList, ClosedForm>;

std::string_view to_string(SeqKind kind);
/// Throws on unknown names.
SeqKind parse_seq_kind(std::string_view name);

/// The three-row passport. An empty `row_u` together with a ClosedForm
/// `row_m` stands for the implicit ascending labels 0, 1, 2, ...
class Passport {
 public:
  Passport() = default;
  /// Validates strict monotonicity of both weight rows and the alignment of
  /// row_m with row_u.
  Passport(std::vector<WeightLabel> row_s, std::vector<WeightLabel> row_u,
           MeasureSeq row_m);

  const std::vector<WeightLabel>& row_s() const { return row_s_; }
  const std::vector<WeightLabel>& row_u() const { return row_u_; }
  const MeasureSeq& row_m() const { return row_m_; }
  bool implicit_row_u() const {
    return std::holds_alternative<ClosedForm>(row_m_);
  }
  /// True when no finite-measure component exists.
  bool all_infinite() const { return !implicit_row_u() && row_u_.empty(); }

  friend bool operator==(const Passport&, const Passport&) = default;

 private:
  std::vector<WeightLabel> row_s_;
  std::vector<WeightLabel> row_u_;
  MeasureSeq row_m_ = FiniteList{};
};

/// Which classification statement produced a decision.
enum class Rule {
  kHomogeneousInfiniteIsomorphism,
  kFirstRowIsomorphism,
  kStarIsomorphism,
  kHomogeneousFiniteIsometry,
  kHomogeneousInfiniteIsometry,
  kInfiniteComponentsIsometry,
  kPassportIsometry,
  kThirdRowIsometry,
};

std::string_view to_string(Rule rule);

struct Decision {
  bool verdict = false;
  Rule rule = Rule::kPassportIsometry;
  std::string witness;
};

/// Groups components by weight; infinite groups go to row_s, finite ones
/// to row_u with their summed measure in row_m.
Passport build_passport(const MeasureSpace& space);

/// Decides sup_i a_i / b_i < inf. Finite lists of equal length are always
/// bounded; closed forms are decided by growth class. Throws
/// "incomparable sequences" for mixed or unequal-length inputs.
bool ratio_bounded(const MeasureSeq& a, const MeasureSeq& b);

/// Isomorphism of measured algebras whose components all have infinite
/// measure. Throws when either passport has a finite-measure component.
Decision decide_isomorphic_pair(const Passport& p, const Passport& q);

/// *-isomorphism of the external log-algebras.
Decision decide_star_isomorphic(const Passport& p, const Passport& q);

/// Isometry of the external log-algebras: all three rows coincide.
Decision decide_isometric_external(const Passport& p, const Passport& q);

/// Isometry of generalized log-algebras over the same algebra: third rows
/// coincide. Throws when the weight rows differ.
Decision decide_isometric_generalized(const Passport& p1, const Passport& p3);

/// Three-line text form: "s: ...", "u: ...", "m: ..." with a trailing
/// newline after each line.
std::string render_passport(const Passport& passport);
/// Inverse of render_passport.
Passport parse_passport_text(std::string_view text);

}  // namespace logspace
