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

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "logspace/extended_real.hpp"

namespace logspace {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Half-open interval [from, to). `to` may be kInfinity; `from` is finite.
struct Interval {
  double from = 0.0;
  double to = 0.0;

  bool bounded() const { return to != kInfinity; }
  double length() const { return to - from; }
  bool contains(const Interval& other) const {
    return from <= other.from && other.to <= to;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPiece {
  double from = 0.0;
  double to = 0.0;
  double value = 0.0;

  Interval interval() const { return {from, to}; }
  friend bool operator==(const IntervalPiece&, const IntervalPiece&) = default;
};

/// Ordered label standing in for the weight of a homogeneous component.
/// Index 0 is countable weight, the only one with a concrete realization.
struct WeightLabel {
  unsigned index = 0;

  bool countable() const { return index == 0; }
  friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
};

/// Real-valued function that is constant on finitely many disjoint
/// half-open pieces and zero elsewhere. Values may have any sign.
class PiecewiseFunction {
 public:
  PiecewiseFunction() = default;
  explicit PiecewiseFunction(std::vector<IntervalPiece> pieces);

  std::span<const IntervalPiece> pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  double value_at(double x) const;

  friend bool operator==(const PiecewiseFunction&,
                         const PiecewiseFunction&) = default;

 private:
  std::vector<IntervalPiece> pieces_;
};

/// Strictly positive, piecewise-constant function whose pieces tile a
/// carrier interval without gaps. Adjacent pieces with the same value are
/// merged on construction.
class PiecewiseDensity {
 public:
  explicit PiecewiseDensity(std::vector<IntervalPiece> pieces);
  static PiecewiseDensity constant(Interval carrier, double value);

  Interval carrier() const { return {pieces_.front().from, pieces_.back().to}; }
  std::span<const IntervalPiece> pieces() const { return pieces_; }

  /// Throws when x lies outside the carrier.
  double value_at(double x) const;

  ExtendedReal mass() const;
  /// Mass of a sub-interval of the carrier.
  ExtendedReal mass(Interval sub) const;
  /// Mass of [carrier().from, x) for finite x inside the carrier.
  double cumulative(double x) const;
  /// Point x at which cumulative(x) == m, for 0 <= m <= mass().
  double quantile(double m) const;

  friend bool operator==(const PiecewiseDensity&,
                         const PiecewiseDensity&) = default;

 private:
  std::vector<IntervalPiece> pieces_;
};

/// Pointwise product and quotient of two densities on the same carrier.
PiecewiseDensity multiply(const PiecewiseDensity& a, const PiecewiseDensity& b);
PiecewiseDensity divide(const PiecewiseDensity& numerator,
                        const PiecewiseDensity& denominator);

/// One homogeneous component: an interval carrier with a density and a
/// weight label. Components with a nonzero label are symbolic: they take
/// part in passports only.
class Component {
 public:
  Component(WeightLabel weight, PiecewiseDensity density)
      : weight_(weight), density_(std::move(density)) {}

  Interval carrier() const { return density_.carrier(); }
  const PiecewiseDensity& density() const { return density_; }
  WeightLabel weight() const { return weight_; }
  bool realizable() const { return weight_.countable(); }
  ExtendedReal measure() const { return density_.mass(); }

  friend bool operator==(const Component&, const Component&) = default;

 private:
  WeightLabel weight_;
  PiecewiseDensity density_;
};

class DensityField;

/// Disjoint union of components, each its own coordinate axis.
class MeasureSpace {
 public:
  explicit MeasureSpace(std::vector<Component> components);

  std::span<const Component> components() const { return components_; }
  const Component& component(std::size_t index) const;
  std::size_t size() const { return components_.size(); }

  /// Same carriers and weights, densities replaced component by component.
  MeasureSpace with_densities(const DensityField& densities) const;

  friend bool operator==(const MeasureSpace&, const MeasureSpace&) = default;

 private:
  std::vector<Component> components_;
};

/// One density per component of some space, e.g. a Radon-Nikodym
/// derivative or the weight functions attached to a norm.
class DensityField {
 public:
  DensityField() = default;
  explicit DensityField(std::vector<PiecewiseDensity> per_component)
      : components_(std::move(per_component)) {}

  /// h == 1 on every component of `space`.
  static DensityField unit(const MeasureSpace& space);
  /// The densities of `space` itself.
  static DensityField of(const MeasureSpace& space);

  std::size_t size() const { return components_.size(); }
  const PiecewiseDensity& operator[](std::size_t i) const {
    return components_[i];
  }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  /// True iff there is one density per component and carriers coincide.
  bool matches(const MeasureSpace& space) const;

  friend bool operator==(const DensityField&, const DensityField&) = default;

 private:
  std::vector<PiecewiseDensity> components_;
};

/// Finite union of half-open intervals, grouped by component. Stored sorted
/// and disjoint; touching intervals are coalesced.
class MeasurableSet {
 public:
  MeasurableSet() = default;
  explicit MeasurableSet(std::vector<std::pair<std::size_t, Interval>> parts);

  const std::map<std::size_t, std::vector<Interval>>& parts() const {
    return parts_;
  }
  bool empty() const { return parts_.empty(); }
  /// Sum of interval lengths (ignores densities).
  double total_length() const;

  friend bool operator==(const MeasurableSet&, const MeasurableSet&) = default;

 private:
  std::map<std::size_t, std::vector<Interval>> parts_;
};

/// mu(set). Throws "symbolic component" or "out of carrier".
ExtendedReal measure(const MeasureSpace& space, const MeasurableSet& set);

ExtendedReal total_measure(const MeasureSpace& space);

/// Per-component density of nu with respect to mu. Both spaces must share
/// carriers and weights; throws "different underlying algebra" otherwise.
DensityField rn_derivative(const MeasureSpace& nu, const MeasureSpace& mu);

/// Exact integral of a non-negative piecewise-constant integrand. Entry i of
/// `integrand` lives on component i; missing trailing entries are zero.
ExtendedReal integrate_piecewise(const MeasureSpace& space,
                                 std::span<const PiecewiseFunction> integrand);

}  // namespace logspace
