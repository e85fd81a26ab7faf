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

#include <variant>

#include "logspace/extended_real.hpp"
#include "logspace/measure_space.hpp"
#include "logspace/step_function.hpp"

namespace logspace {

/// integral of log(1 + |f|) dmu
struct External {
  friend bool operator==(const External&, const External&) = default;
};

/// integral of log(1 + h|f|) dmu, with h = dnu/dmu
struct Internal {
  DensityField h;
  friend bool operator==(const Internal&, const Internal&) = default;
};

/// integral of h1 log(1 + h2|f|) dmu
struct Generalized {
  DensityField h1;
  DensityField h2;
  friend bool operator==(const Generalized&, const Generalized&) = default;
};

using NormKind = std::variant<External, Internal, Generalized>;

/// Exact F-norm of a step function. Infinite iff a nonzero coefficient sits
/// on an unbounded piece. Throws "kind/space mismatch" when an attached
/// density does not cover the space component by component.
ExtendedReal log_norm(const StepFunction& f, const MeasureSpace& space,
                      const NormKind& kind);

bool is_member(const StepFunction& f, const MeasureSpace& space,
               const NormKind& kind);

/// The induced metric, log_norm(f - g).
ExtendedReal distance(const StepFunction& f, const StepFunction& g,
                      const MeasureSpace& space, const NormKind& kind);

/// Midpoint Riemann sum of the selected integrand on a grid of
/// `subdivisions_per_unit` cells per unit length, anchored at the integers
/// and clipped to the support hull of f on each component. Evaluates all
/// functions pointwise and shares no code with log_norm. Throws "oracle
/// requires bounded support" for unbounded supports.
double riemann_oracle(const StepFunction& f, const MeasureSpace& space,
                      const NormKind& kind, long subdivisions_per_unit);

}  // namespace logspace
