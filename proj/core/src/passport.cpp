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

#include "logspace/passport.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "logspace/error.hpp"
#include "logspace/format.hpp"

namespace logspace {
namespace {

constexpr double kMeasureTolerance = 1e-12;

std::size_t param_count(SeqKind kind) {
  switch (kind) {
    case SeqKind::kConst:
    case SeqKind::kRecip:
      return 1;
    case SeqKind::kLinear:
    case SeqKind::kGeom:
      return 2;
  }
  return 0;
}

std::vector<std::string_view> param_names(SeqKind kind) {
  switch (kind) {
    case SeqKind::kConst:
      return {"c"};
    case SeqKind::kLinear:
      return {"a", "b"};
    case SeqKind::kRecip:
      return {"a"};
    case SeqKind::kGeom:
      return {"a", "r"};
  }
  return {};
}

// Growth of i -> term(i), coarsest first. Geometric classes carry their
// ratio to break ties.
struct Growth {
  int rank = 0;
  double rate = 0.0;
};

enum : int { kDecay = 0, kReciprocal, kConstant, kLinear, kExponential };

Growth growth(const ClosedForm& seq) {
  switch (seq.kind()) {
    case SeqKind::kConst:
      return {kConstant};
    case SeqKind::kLinear:
      return {kLinear};
    case SeqKind::kRecip:
      return {kReciprocal};
    case SeqKind::kGeom: {
      const double r = seq.params()[1];
      if (r < 1.0) return {kDecay, r};
      if (r > 1.0) return {kExponential, r};
      return {kConstant};
    }
  }
  return {};
}

std::string join_labels(const std::vector<WeightLabel>& row) {
  std::string out;
  for (const auto& w : row) out += " " + std::to_string(w.index);
  return out;
}

std::string describe(const std::vector<WeightLabel>& row) {
  return "(" + (row.empty() ? std::string() : join_labels(row).substr(1)) + ")";
}

std::string describe_u(const Passport& p) {
  return p.implicit_row_u() ? "(0 1 2 ...)" : describe(p.row_u());
}

// First difference between two weight rows, if any.
std::optional<std::string> row_mismatch(std::string_view name,
                                        const std::vector<WeightLabel>& a,
                                        const std::vector<WeightLabel>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) {
      return std::string(name) + " differs at index " + std::to_string(i) +
             ": " + std::to_string(a[i].index) + " vs " +
             std::to_string(b[i].index);
    }
  }
  if (a.size() != b.size()) {
    return std::string(name) + " lengths differ: " + describe(a) + " vs " +
           describe(b);
  }
  return std::nullopt;
}

std::optional<std::string> row_u_mismatch(const Passport& p,
                                          const Passport& q) {
  if (p.implicit_row_u() != q.implicit_row_u()) {
    return "row_u differs: " + describe_u(p) + " vs " + describe_u(q);
  }
  return row_mismatch("row_u", p.row_u(), q.row_u());
}

bool close(double a, double b) {
  return std::abs(a - b) <= kMeasureTolerance * std::max(std::abs(a), std::abs(b));
}

std::optional<std::string> measure_mismatch(const MeasureSeq& a,
                                            const MeasureSeq& b) {
  const auto* fa = std::get_if<FiniteList>(&a);
  const auto* fb = std::get_if<FiniteList>(&b);
  if ((fa == nullptr) != (fb == nullptr)) throw Error("incomparable sequences");
  if (fa) {
    const std::size_t n = std::min(fa->values.size(), fb->values.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!close(fa->values[i], fb->values[i])) {
        return "row_m differs at index " + std::to_string(i) + ": " +
               format_real(fa->values[i]) + " vs " +
               format_real(fb->values[i]);
      }
    }
    if (fa->values.size() != fb->values.size()) {
      return "row_m lengths differ: " + std::to_string(fa->values.size()) +
             " vs " + std::to_string(fb->values.size());
    }
    return std::nullopt;
  }
  const auto& ca = std::get<ClosedForm>(a);
  const auto& cb = std::get<ClosedForm>(b);
  if (ca != cb) {
    std::ostringstream os;
    os << "row_m rules differ: ";
    os << to_string(ca.kind()) << " vs " << to_string(cb.kind());
    if (ca.kind() == cb.kind()) os << " with different parameters";
    return os.str();
  }
  return std::nullopt;
}

void check_increasing(const std::vector<WeightLabel>& row,
                      std::string_view name) {
  for (std::size_t i = 1; i < row.size(); ++i) {
    if (!(row[i - 1] < row[i])) {
      throw Error(std::string(name) + " must be strictly increasing");
    }
  }
}

double parse_double(std::string_view token) {
  double value = 0.0;
  if (token == "inf") return std::numeric_limits<double>::infinity();
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error("malformed number '" + std::string(token) + "'");
  }
  return value;
}

unsigned parse_label(std::string_view token) {
  unsigned value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error("malformed weight label '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

ClosedForm::ClosedForm(SeqKind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {
  if (params_.size() != param_count(kind_)) {
    throw Error(std::string(to_string(kind_)) + " expects " +
                std::to_string(param_count(kind_)) + " parameter(s)");
  }
  for (double p : params_) {
    if (!std::isfinite(p)) throw Error("sequence parameters must be finite");
  }
  bool positive = params_[0] > 0.0;
  if (kind_ == SeqKind::kLinear) positive = positive && params_[0] + params_[1] > 0.0;
  if (kind_ == SeqKind::kGeom) positive = positive && params_[1] > 0.0;
  if (!positive) {
    throw Error(std::string(to_string(kind_)) +
                " parameters must give strictly positive terms");
  }
}

double ClosedForm::term(long i) const {
  const double x = static_cast<double>(i);
  switch (kind_) {
    case SeqKind::kConst:
      return params_[0];
    case SeqKind::kLinear:
      return params_[0] * x + params_[1];
    case SeqKind::kRecip:
      return params_[0] / x;
    case SeqKind::kGeom:
      return params_[0] * std::pow(params_[1], x);
  }
  return 0.0;
}

double ClosedForm::log_term(long i) const {
  const double x = static_cast<double>(i);
  switch (kind_) {
    case SeqKind::kGeom:
      return std::log(params_[0]) + x * std::log(params_[1]);
    case SeqKind::kRecip:
      return std::log(params_[0]) - std::log(x);
    default:
      return std::log(term(i));
  }
}

std::string_view to_string(SeqKind kind) {
  switch (kind) {
    case SeqKind::kConst:
      return "CONST";
    case SeqKind::kLinear:
      return "LINEAR";
    case SeqKind::kRecip:
      return "RECIP";
    case SeqKind::kGeom:
      return "GEOM";
  }
  return "?";
}

SeqKind parse_seq_kind(std::string_view name) {
  if (name == "CONST") return SeqKind::kConst;
  if (name == "LINEAR") return SeqKind::kLinear;
  if (name == "RECIP") return SeqKind::kRecip;
  if (name == "GEOM") return SeqKind::kGeom;
  throw Error("unknown sequence kind '" + std::string(name) + "'");
}

Passport::Passport(std::vector<WeightLabel> row_s,
                   std::vector<WeightLabel> row_u, MeasureSeq row_m)
    : row_s_(std::move(row_s)),
      row_u_(std::move(row_u)),
      row_m_(std::move(row_m)) {
  check_increasing(row_s_, "row_s");
  check_increasing(row_u_, "row_u");
  if (const auto* list = std::get_if<FiniteList>(&row_m_)) {
    if (list->values.size() != row_u_.size()) {
      throw Error("row_m must have one measure per row_u entry");
    }
    for (double v : list->values) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error("row_m measures must be finite and positive");
      }
    }
    for (const auto& w : row_u_) {
      if (std::binary_search(row_s_.begin(), row_s_.end(), w)) {
        throw Error("weight " + std::to_string(w.index) +
                    " appears in both row_s and row_u");
      }
    }
  } else if (!row_u_.empty()) {
    throw Error("a rule for row_m requires the implicit row_u 0 1 2 ...");
  }
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::kHomogeneousInfiniteIsomorphism:
      return "homogeneous-infinite-isomorphism";
    case Rule::kFirstRowIsomorphism:
      return "first-row-isomorphism";
    case Rule::kStarIsomorphism:
      return "star-isomorphism";
    case Rule::kHomogeneousFiniteIsometry:
      return "homogeneous-finite-isometry";
    case Rule::kHomogeneousInfiniteIsometry:
      return "homogeneous-infinite-isometry";
    case Rule::kInfiniteComponentsIsometry:
      return "infinite-components-isometry";
    case Rule::kPassportIsometry:
      return "passport-isometry";
    case Rule::kThirdRowIsometry:
      return "third-row-isometry";
  }
  return "?";
}

Passport build_passport(const MeasureSpace& space) {
  std::map<WeightLabel, ExtendedSum> groups;
  for (const auto& c : space.components()) groups[c.weight()].add(c.measure());

  std::vector<WeightLabel> row_s;
  std::vector<WeightLabel> row_u;
  FiniteList row_m;
  for (const auto& [weight, sum] : groups) {
    const ExtendedReal total = sum.total();
    if (total.is_infinite()) {
      row_s.push_back(weight);
    } else {
      row_u.push_back(weight);
      row_m.values.push_back(total.value());
    }
  }
  return Passport(std::move(row_s), std::move(row_u), std::move(row_m));
}

bool ratio_bounded(const MeasureSeq& a, const MeasureSeq& b) {
  const auto* fa = std::get_if<FiniteList>(&a);
  const auto* fb = std::get_if<FiniteList>(&b);
  if (fa && fb) {
    if (fa->values.size() != fb->values.size()) {
      throw Error("incomparable sequences");
    }
    return true;
  }
  if (fa || fb) throw Error("incomparable sequences");

  const Growth ga = growth(std::get<ClosedForm>(a));
  const Growth gb = growth(std::get<ClosedForm>(b));
  if (ga.rank != gb.rank) return ga.rank < gb.rank;
  if (ga.rank == kDecay || ga.rank == kExponential) return ga.rate <= gb.rate;
  return true;
}

Decision decide_isomorphic_pair(const Passport& p, const Passport& q) {
  if (!p.all_infinite() || !q.all_infinite()) {
    throw Error("hypothesis violated: finite-measure component present");
  }
  Decision d;
  d.rule = (p.row_s().size() == 1 && q.row_s().size() == 1)
               ? Rule::kHomogeneousInfiniteIsomorphism
               : Rule::kFirstRowIsomorphism;
  if (auto diff = row_mismatch("row_s", p.row_s(), q.row_s())) {
    d.witness = *diff;
    return d;
  }
  d.verdict = true;
  d.witness = "first rows coincide: " + describe(p.row_s());
  return d;
}

Decision decide_star_isomorphic(const Passport& p, const Passport& q) {
  Decision d;
  d.rule = Rule::kStarIsomorphism;
  if (auto diff = row_mismatch("row_s", p.row_s(), q.row_s())) {
    d.witness = *diff;
    return d;
  }
  if (auto diff = row_u_mismatch(p, q)) {
    d.witness = *diff;
    return d;
  }
  if (!ratio_bounded(p.row_m(), q.row_m())) {
    d.witness = "μᵢ/νᵢ unbounded";
    return d;
  }
  if (!ratio_bounded(q.row_m(), p.row_m())) {
    d.witness = "νᵢ/μᵢ unbounded";
    return d;
  }
  d.verdict = true;
  d.witness = "first and second rows coincide; μᵢ/νᵢ and νᵢ/μᵢ bounded";
  return d;
}

Decision decide_isometric_external(const Passport& p, const Passport& q) {
  Decision d;
  const bool single_finite = p.row_s().empty() && q.row_s().empty() &&
                             !p.implicit_row_u() && !q.implicit_row_u() &&
                             p.row_u().size() == 1 && q.row_u().size() == 1;
  const bool infinite_only = p.all_infinite() && q.all_infinite();
  if (single_finite) {
    d.rule = Rule::kHomogeneousFiniteIsometry;
  } else if (infinite_only && p.row_s().size() == 1 && q.row_s().size() == 1) {
    d.rule = Rule::kHomogeneousInfiniteIsometry;
  } else if (infinite_only) {
    d.rule = Rule::kInfiniteComponentsIsometry;
  } else {
    d.rule = Rule::kPassportIsometry;
  }

  if (auto diff = row_mismatch("row_s", p.row_s(), q.row_s())) {
    d.witness = *diff;
    return d;
  }
  if (auto diff = row_u_mismatch(p, q)) {
    d.witness = *diff;
    return d;
  }
  if (auto diff = measure_mismatch(p.row_m(), q.row_m())) {
    d.witness = *diff;
    return d;
  }
  d.verdict = true;
  d.witness = infinite_only ? "first rows coincide" : "passports coincide";
  return d;
}

Decision decide_isometric_generalized(const Passport& p1, const Passport& p3) {
  if (row_mismatch("row_s", p1.row_s(), p3.row_s()) ||
      row_u_mismatch(p1, p3)) {
    throw Error("hypothesis violated: different underlying algebra");
  }
  Decision d;
  d.rule = Rule::kThirdRowIsometry;
  if (auto diff = measure_mismatch(p1.row_m(), p3.row_m())) {
    d.witness = *diff;
    return d;
  }
  d.verdict = true;
  d.witness =
      "third rows coincide (same algebra checked; infinite measure on "
      "homogeneous components not checked)";
  return d;
}

std::string render_passport(const Passport& passport) {
  std::string out = "s:" + join_labels(passport.row_s()) + "\n";
  out += "u:";
  out += passport.implicit_row_u() ? std::string(" 0 1 2 ...")
                                   : join_labels(passport.row_u());
  out += "\nm:";
  if (const auto* list = std::get_if<FiniteList>(&passport.row_m())) {
    for (double v : list->values) out += " " + format_real(v);
  } else {
    const auto& rule = std::get<ClosedForm>(passport.row_m());
    out += " ";
    out += to_string(rule.kind());
    const auto names = param_names(rule.kind());
    for (std::size_t i = 0; i < names.size(); ++i) {
      out += " ";
      out += names[i];
      out += "=" + format_real(rule.params()[i]);
    }
  }
  out += "\n";
  return out;
}

Passport parse_passport_text(std::string_view text) {
  std::map<char, std::vector<std::string_view>> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (line.size() < 2 || line[1] != ':' ||
        (line[0] != 's' && line[0] != 'u' && line[0] != 'm')) {
      throw Error("malformed passport line '" + std::string(line) + "'");
    }
    if (rows.count(line[0])) {
      throw Error(std::string("duplicate passport row ") + line[0]);
    }
    rows[line[0]] = split_words(line.substr(2));
  }
  if (rows.size() != 3) throw Error("passport needs rows s, u and m");

  std::vector<WeightLabel> row_s;
  for (auto t : rows['s']) row_s.push_back({parse_label(t)});

  const auto& m = rows['m'];
  const bool rule = !m.empty() && std::isalpha(static_cast<unsigned char>(m[0][0]));
  std::vector<WeightLabel> row_u;
  const auto& u = rows['u'];
  if (rule) {
    if (u.size() != 4 || u[0] != "0" || u[1] != "1" || u[2] != "2" ||
        u[3] != "...") {
      throw Error("a rule for row_m requires the implicit row_u 0 1 2 ...");
    }
  } else {
    for (auto t : u) row_u.push_back({parse_label(t)});
  }

  if (!rule) {
    FiniteList list;
    for (auto t : m) list.values.push_back(parse_double(t));
    return Passport(std::move(row_s), std::move(row_u), std::move(list));
  }
  const SeqKind kind = parse_seq_kind(m[0]);
  const auto names = param_names(kind);
  if (m.size() != names.size() + 1) throw Error("wrong parameter count");
  std::vector<double> params;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string_view token = m[i + 1];
    const std::string prefix = std::string(names[i]) + "=";
    if (token.substr(0, prefix.size()) != prefix) {
      throw Error("expected parameter '" + prefix + "'");
    }
    params.push_back(parse_double(token.substr(prefix.size())));
  }
  return Passport(std::move(row_s), {}, ClosedForm(kind, std::move(params)));
}

}  // namespace logspace
