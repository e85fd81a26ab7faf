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

#include "logspace/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace logspace {

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double SampleRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t SampleRng::below(std::uint64_t n) {
  const std::uint64_t limit = engine_.max() - engine_.max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

StepFunction random_step_function(const MeasureSpace& space, SampleRng& rng,
                                  const SampleOptions& options) {
  std::vector<ComponentPiece> pieces;
  for (std::size_t index = 0; index < space.size(); ++index) {
    const auto& c = space.components()[index];
    if (!c.realizable()) continue;
    const double lo = c.carrier().from;
    const double hi = c.carrier().bounded()
                          ? c.carrier().to
                          : c.density().quantile(options.unbounded_mass);

    const auto count = rng.below(static_cast<std::uint64_t>(options.max_pieces) + 1);
    std::vector<double> points(2 * count);
    for (auto& p : points) p = rng.uniform(lo, hi);
    std::sort(points.begin(), points.end());
    for (std::size_t k = 0; k < count; ++k) {
      const double from = points[2 * k];
      const double to = points[2 * k + 1];
      const double modulus = rng.uniform(0.0, options.max_modulus);
      const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      if (from < to) pieces.push_back({index, from, to, std::polar(modulus, phase)});
    }
  }
  return StepFunction(std::move(pieces));
}

}  // namespace logspace
