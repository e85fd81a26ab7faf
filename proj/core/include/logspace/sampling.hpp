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

#include <cstdint>
#include <random>

#include "logspace/measure_space.hpp"
#include "logspace/step_function.hpp"

namespace logspace {

/// Deterministic random source. Each (seed, stream) pair yields an
/// independent sequence, so per-sample streams do not depend on evaluation
/// order. Uniform variates are built from raw engine bits and are identical
/// across standard library implementations.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t stream);

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

struct SampleOptions {
  double max_modulus = 10.0;
  int max_pieces = 8;
  /// On unbounded carriers, support stays within the first this-many units
  /// of mass.
  double unbounded_mass = 4.0;
};

/// Random step function on the realizable components of `space`: up to
/// `max_pieces` disjoint pieces per component with uniform boundaries and
/// coefficients of modulus in [0, max_modulus] and uniform phase.
StepFunction random_step_function(const MeasureSpace& space, SampleRng& rng,
                                  const SampleOptions& options = {});

}  // namespace logspace
