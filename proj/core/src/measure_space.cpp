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

#include "logspace/measure_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logspace/error.hpp"
#include "refinement.hpp"

namespace logspace {
namespace {

void check_interval(double from, double to) {
  if (!std::isfinite(from) || std::isnan(to) || !(from < to)) {
    throw Error("invalid interval [" + std::to_string(from) + ", " +
                std::to_string(to) + ")");
  }
}

void sort_by_from(std::vector<IntervalPiece>& pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const IntervalPiece& a, const IntervalPiece& b) {
              return a.from < b.from;
            });
}

// Cells of the common refinement of two densities on one carrier.
template <class Op>
PiecewiseDensity combine(const PiecewiseDensity& a, const PiecewiseDensity& b,
                         Op op) {
  if (a.carrier() != b.carrier()) {
    throw Error("different underlying algebra");
  }
  detail::Breakpoints bp;
  bp.add_pieces(a.pieces());
  bp.add_pieces(b.pieces());
  const auto points = std::move(bp).finish();
  std::vector<IntervalPiece> out;
  out.reserve(points.size());
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const double x = points[k];
    out.push_back({x, points[k + 1], op(a.value_at(x), b.value_at(x))});
  }
  return PiecewiseDensity(std::move(out));
}

}  // namespace

PiecewiseFunction::PiecewiseFunction(std::vector<IntervalPiece> pieces)
    : pieces_(std::move(pieces)) {
  sort_by_from(pieces_);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    check_interval(p.from, p.to);
    if (!std::isfinite(p.value)) throw Error("piece value must be finite");
    if (i > 0 && pieces_[i - 1].to > p.from) {
      throw Error("overlapping pieces");
    }
  }
}

double PiecewiseFunction::value_at(double x) const {
  const auto* p = detail::find_piece(pieces(), x);
  return p ? p->value : 0.0;
}

PiecewiseDensity::PiecewiseDensity(std::vector<IntervalPiece> pieces) {
  if (pieces.empty()) throw Error("density needs at least one piece");
  sort_by_from(pieces);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    check_interval(p.from, p.to);
    if (!(p.value > 0.0) || !std::isfinite(p.value)) {
      throw Error("density must be strictly positive and finite");
    }
    if (i > 0 && pieces[i - 1].to != p.from) {
      throw Error("density pieces must tile the carrier without gaps");
    }
    if (!pieces_.empty() && pieces_.back().value == p.value) {
      pieces_.back().to = p.to;
    } else {
      pieces_.push_back(p);
    }
  }
}

PiecewiseDensity PiecewiseDensity::constant(Interval carrier, double value) {
  return PiecewiseDensity({{carrier.from, carrier.to, value}});
}

double PiecewiseDensity::value_at(double x) const {
  const auto* p = detail::find_piece(pieces(), x);
  if (!p) throw Error("out of carrier");
  return p->value;
}

ExtendedReal PiecewiseDensity::mass() const { return mass(carrier()); }

ExtendedReal PiecewiseDensity::mass(Interval sub) const {
  if (!carrier().contains(sub)) throw Error("out of carrier");
  ExtendedSum sum;
  for (const auto& p : pieces_) {
    const double lo = std::max(p.from, sub.from);
    const double hi = std::min(p.to, sub.to);
    if (lo < hi) sum.add((hi - lo) * p.value);
  }
  return sum.total();
}

double PiecewiseDensity::cumulative(double x) const {
  if (!std::isfinite(x)) throw Error("cumulative mass needs a finite point");
  if (x <= carrier().from) return 0.0;
  return mass({carrier().from, x}).value();
}

double PiecewiseDensity::quantile(double m) const {
  if (m < 0.0) throw Error("negative mass");
  double acc = 0.0;
  for (const auto& p : pieces_) {
    const double piece_mass = (p.to - p.from) * p.value;
    if (m <= acc + piece_mass) {
      if (m == acc + piece_mass) return p.to;
      return p.from + (m - acc) / p.value;
    }
    acc += piece_mass;
  }
  throw Error("mass exceeds the total of the density");
}

PiecewiseDensity multiply(const PiecewiseDensity& a,
                          const PiecewiseDensity& b) {
  return combine(a, b, [](double x, double y) { return x * y; });
}

PiecewiseDensity divide(const PiecewiseDensity& numerator,
                        const PiecewiseDensity& denominator) {
  return combine(numerator, denominator,
                 [](double x, double y) { return x / y; });
}

MeasureSpace::MeasureSpace(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error("measure space needs at least one component");
  }
}

const Component& MeasureSpace::component(std::size_t index) const {
  if (index >= components_.size()) {
    throw Error("unknown component " + std::to_string(index));
  }
  return components_[index];
}

MeasureSpace MeasureSpace::with_densities(const DensityField& densities) const {
  if (!densities.matches(*this)) throw Error("kind/space mismatch");
  std::vector<Component> out;
  out.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    out.emplace_back(components_[i].weight(), densities[i]);
  }
  return MeasureSpace(std::move(out));
}

DensityField DensityField::unit(const MeasureSpace& space) {
  std::vector<PiecewiseDensity> out;
  for (const auto& c : space.components()) {
    out.push_back(PiecewiseDensity::constant(c.carrier(), 1.0));
  }
  return DensityField(std::move(out));
}

DensityField DensityField::of(const MeasureSpace& space) {
  std::vector<PiecewiseDensity> out;
  for (const auto& c : space.components()) out.push_back(c.density());
  return DensityField(std::move(out));
}

bool DensityField::matches(const MeasureSpace& space) const {
  if (components_.size() != space.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].carrier() != space.components()[i].carrier()) {
      return false;
    }
  }
  return true;
}

MeasurableSet::MeasurableSet(
    std::vector<std::pair<std::size_t, Interval>> parts) {
  for (const auto& [component, interval] : parts) {
    check_interval(interval.from, interval.to);
    parts_[component].push_back(interval);
  }
  for (auto& [component, intervals] : parts_) {
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) {
                return a.from < b.from;
              });
    std::vector<Interval> merged;
    for (const auto& iv : intervals) {
      if (!merged.empty() && merged.back().to > iv.from) {
        throw Error("overlapping intervals in set");
      }
      if (!merged.empty() && merged.back().to == iv.from) {
        merged.back().to = iv.to;
      } else {
        merged.push_back(iv);
      }
    }
    intervals = std::move(merged);
  }
}

double MeasurableSet::total_length() const {
  double total = 0.0;
  for (const auto& [component, intervals] : parts_) {
    for (const auto& iv : intervals) total += iv.length();
  }
  return total;
}

ExtendedReal measure(const MeasureSpace& space, const MeasurableSet& set) {
  ExtendedSum sum;
  for (const auto& [index, intervals] : set.parts()) {
    if (index >= space.size()) throw Error("out of carrier");
    const auto& c = space.components()[index];
    if (!c.realizable()) throw Error("symbolic component");
    for (const auto& iv : intervals) {
      if (!c.carrier().contains(iv)) throw Error("out of carrier");
      sum.add(c.density().mass(iv));
    }
  }
  return sum.total();
}

ExtendedReal total_measure(const MeasureSpace& space) {
  ExtendedSum sum;
  for (const auto& c : space.components()) sum.add(c.measure());
  return sum.total();
}

DensityField rn_derivative(const MeasureSpace& nu, const MeasureSpace& mu) {
  if (nu.size() != mu.size()) throw Error("different underlying algebra");
  std::vector<PiecewiseDensity> out;
  out.reserve(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto& a = nu.components()[i];
    const auto& b = mu.components()[i];
    if (a.carrier() != b.carrier() || a.weight() != b.weight()) {
      throw Error("different underlying algebra");
    }
    out.push_back(divide(a.density(), b.density()));
  }
  return DensityField(std::move(out));
}

ExtendedReal integrate_piecewise(const MeasureSpace& space,
                                 std::span<const PiecewiseFunction> integrand) {
  if (integrand.size() > space.size()) throw Error("out of carrier");
  ExtendedSum sum;
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    const auto& fn = integrand[i];
    if (fn.empty()) continue;
    const auto& c = space.components()[i];
    if (!c.realizable()) throw Error("symbolic component");
    for (const auto& p : fn.pieces()) {
      if (p.value < 0.0) throw Error("signed integrand unsupported");
      if (!c.carrier().contains(p.interval())) throw Error("out of carrier");
    }
    detail::Breakpoints bp;
    bp.add_pieces(fn.pieces());
    bp.add_pieces(c.density().pieces());
    const auto points = std::move(bp).finish();
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
      const double x = points[k];
      const double value = fn.value_at(x);
      if (value == 0.0) continue;
      sum.add((points[k + 1] - x) * c.density().value_at(x) * value);
    }
  }
  return sum.total();
}

}  // namespace logspace
