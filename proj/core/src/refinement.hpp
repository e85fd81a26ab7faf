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

// Common-refinement helpers shared by the exact evaluators.

#include <algorithm>
#include <span>
#include <vector>

namespace logspace::detail {

/// Collects piece boundaries and yields the sorted distinct list.
class Breakpoints {
 public:
  void add(double x) { points_.push_back(x); }
  template <class Piece>
  void add_pieces(std::span<const Piece> pieces) {
    for (const auto& p : pieces) {
      points_.push_back(p.from);
      points_.push_back(p.to);
    }
  }
  std::vector<double> finish() && {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    return std::move(points_);
  }

 private:
  std::vector<double> points_;
};

/// Piece containing x under half-open semantics, or nullptr.
template <class Piece>
const Piece* find_piece(std::span<const Piece> pieces, double x) {
  auto it = std::upper_bound(
      pieces.begin(), pieces.end(), x,
      [](double value, const Piece& p) { return value < p.from; });
  if (it == pieces.begin()) return nullptr;
  --it;
  return x < it->to ? &*it : nullptr;
}

}  // namespace logspace::detail
