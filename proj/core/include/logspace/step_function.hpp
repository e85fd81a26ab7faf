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

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "logspace/measure_space.hpp"

namespace logspace {

using Complex = std::complex<double>;

struct StepPiece {
  double from = 0.0;
  double to = 0.0;
  Complex coef;

  Interval interval() const { return {from, to}; }
  friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

/// Input form of a step-function piece.
struct ComponentPiece {
  std::size_t component = 0;
  double from = 0.0;
  double to = 0.0;
  Complex coef;
};

/// Complex simple function: finitely many constant pieces on half-open
/// intervals, zero elsewhere. Always held in canonical form (sorted,
/// zero pieces dropped, touching pieces with equal coefficients merged), so
/// operator== is equality of functions.
class StepFunction {
 public:
  StepFunction() = default;
  /// Throws on empty or overlapping pieces.
  explicit StepFunction(std::vector<ComponentPiece> pieces);
  /// The constant `value` on `interval` of `component`.
  static StepFunction indicator(std::size_t component, Interval interval,
                                Complex value = 1.0);

  bool is_zero() const { return components_.empty(); }
  const std::map<std::size_t, std::vector<StepPiece>>& components() const {
    return components_;
  }
  std::span<const StepPiece> pieces(std::size_t component) const;
  Complex value_at(std::size_t component, double x) const;

  /// Flat list of pieces, ordered by component and position.
  std::vector<ComponentPiece> to_pieces() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::map<std::size_t, std::vector<StepPiece>> components_;
};

StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction subtract(const StepFunction& f, const StepFunction& g);
StepFunction multiply(const StepFunction& f, const StepFunction& g);
StepFunction scale(const StepFunction& f, Complex alpha);

/// Throws "symbolic component" or "out of carrier" unless every piece of f
/// lies inside the carrier of a realizable component of `space`.
void check_defined_on(const StepFunction& f, const MeasureSpace& space);

}  // namespace logspace
