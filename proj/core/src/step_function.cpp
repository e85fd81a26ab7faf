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

#include "logspace/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "logspace/error.hpp"
#include "refinement.hpp"

namespace logspace {
namespace {

// Sorted, non-overlapping input -> canonical form.
std::vector<StepPiece> canonicalize(std::vector<StepPiece> pieces) {
  std::vector<StepPiece> out;
  out.reserve(pieces.size());
  for (const auto& p : pieces) {
    if (p.coef == Complex(0.0, 0.0)) continue;
    if (!out.empty() && out.back().to == p.from && out.back().coef == p.coef) {
      out.back().to = p.to;
    } else {
      out.push_back(p);
    }
  }
  return out;
}

template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  std::set<std::size_t> indices;
  for (const auto& [c, _] : f.components()) indices.insert(c);
  for (const auto& [c, _] : g.components()) indices.insert(c);

  std::vector<ComponentPiece> out;
  for (std::size_t c : indices) {
    detail::Breakpoints bp;
    bp.add_pieces(f.pieces(c));
    bp.add_pieces(g.pieces(c));
    const auto points = std::move(bp).finish();
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
      const double x = points[k];
      const Complex v = op(f.value_at(c, x), g.value_at(c, x));
      if (v != Complex(0.0, 0.0)) out.push_back({c, x, points[k + 1], v});
    }
  }
  return StepFunction(std::move(out));
}

}  // namespace

StepFunction::StepFunction(std::vector<ComponentPiece> pieces) {
  std::map<std::size_t, std::vector<StepPiece>> grouped;
  for (const auto& p : pieces) {
    if (!std::isfinite(p.from) || std::isnan(p.to) || !(p.from < p.to)) {
      throw Error("invalid step-function piece");
    }
    if (!std::isfinite(p.coef.real()) || !std::isfinite(p.coef.imag())) {
      throw Error("step-function coefficient must be finite");
    }
    grouped[p.component].push_back({p.from, p.to, p.coef});
  }
  for (auto& [component, list] : grouped) {
    std::sort(list.begin(), list.end(),
              [](const StepPiece& a, const StepPiece& b) {
                return a.from < b.from;
              });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i - 1].to > list[i].from) {
        throw Error("overlapping step-function pieces");
      }
    }
    auto canonical = canonicalize(std::move(list));
    if (!canonical.empty()) components_[component] = std::move(canonical);
  }
}

StepFunction StepFunction::indicator(std::size_t component, Interval interval,
                                     Complex value) {
  return StepFunction({{component, interval.from, interval.to, value}});
}

std::span<const StepPiece> StepFunction::pieces(std::size_t component) const {
  auto it = components_.find(component);
  if (it == components_.end()) return {};
  return it->second;
}

Complex StepFunction::value_at(std::size_t component, double x) const {
  const auto* p = detail::find_piece(pieces(component), x);
  return p ? p->coef : Complex(0.0, 0.0);
}

std::vector<ComponentPiece> StepFunction::to_pieces() const {
  std::vector<ComponentPiece> out;
  for (const auto& [component, list] : components_) {
    for (const auto& p : list) out.push_back({component, p.from, p.to, p.coef});
  }
  return out;
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Complex a, Complex b) { return a + b; });
}

StepFunction subtract(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Complex a, Complex b) { return a - b; });
}

StepFunction multiply(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Complex a, Complex b) { return a * b; });
}

StepFunction scale(const StepFunction& f, Complex alpha) {
  auto pieces = f.to_pieces();
  for (auto& p : pieces) p.coef *= alpha;
  return StepFunction(std::move(pieces));
}

void check_defined_on(const StepFunction& f, const MeasureSpace& space) {
  for (const auto& [index, list] : f.components()) {
    if (index >= space.size()) throw Error("out of carrier");
    const auto& c = space.components()[index];
    if (!c.realizable()) throw Error("symbolic component");
    for (const auto& p : list) {
      if (!c.carrier().contains(p.interval())) throw Error("out of carrier");
    }
  }
}

}  // namespace logspace
