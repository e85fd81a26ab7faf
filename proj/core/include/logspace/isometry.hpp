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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logspace/log_norm.hpp"
#include "logspace/measure_space.hpp"
#include "logspace/step_function.hpp"

namespace logspace {

/// y = slope * x + offset on [from, to) of a source component, landing on
/// [image_from, image_to) of a target component. Endpoint images are stored
/// so that consecutive pieces tile the target exactly.
struct AffinePiece {
  std::size_t src_component = 0;
  double from = 0.0;
  double to = 0.0;
  std::size_t dst_component = 0;
  double image_from = 0.0;
  double image_to = 0.0;
  double slope = 1.0;
  double offset = 0.0;

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Strictly increasing piecewise-linear bijection between unions of
/// interval components.
class TransportMap {
 public:
  TransportMap() = default;
  /// Sorts by source position; throws on non-positive slopes or overlaps.
  explicit TransportMap(std::vector<AffinePiece> pieces);

  std::span<const AffinePiece> pieces() const { return pieces_; }

  struct Point {
    std::size_t component = 0;
    double x = 0.0;
  };
  /// Image of a point; throws "unmapped support" outside the source.
  Point apply(std::size_t component, double x) const;

  /// Image of [interval) on `component`; throws "unmapped support" unless the
  /// interval is covered.
  std::vector<std::pair<std::size_t, Interval>> image(std::size_t component,
                                                      Interval interval) const;
  MeasurableSet image(const MeasurableSet& set) const;

  friend bool operator==(const TransportMap&, const TransportMap&) = default;

 private:
  std::vector<AffinePiece> pieces_;
};

/// CDF-matching map G^{-1} o F from one component onto another of equal
/// total measure. Throws "no measure-preserving map" or "symbolic component".
TransportMap monotone_transport(const Component& src, const Component& dst,
                                std::size_t src_index = 0,
                                std::size_t dst_index = 0);

/// Boundaries x_0 < x_1 < ... < x_count with unit mass between consecutive
/// points, starting at the left end of the carrier.
std::vector<double> unit_cuts(const PiecewiseDensity& density,
                              std::size_t count);

/// Components on each side are laid end to end in the listed order; at most
/// one component per side may have infinite measure and it must come last.
struct TransportPair {
  std::vector<std::size_t> src;
  std::vector<std::size_t> dst;
};

/// Measure-preserving map assembled from per-pair monotone maps. Infinite
/// pairs are cut into unit-measure pieces left to right and matched cut by
/// cut. Every component of both spaces must be used exactly once.
TransportMap glue_transports(const MeasureSpace& src, const MeasureSpace& dst,
                             std::span<const TransportPair> pairs);

/// Pairs the components of two realizable spaces with equal passports and
/// glues the transports. Finite components are concatenated in index order;
/// infinite-measure components are matched in order, the first one
/// absorbing the finite ones. Spaces with different counts of
/// infinite-measure components are rejected.
TransportMap transport_between(const MeasureSpace& src,
                               const MeasureSpace& dst);

/// (J f)(y) = f(T^{-1}(y)). Coefficients are carried over unchanged.
StepFunction lift(const TransportMap& map, const StepFunction& f);

/// U(f) = f / h. External norm of f equals the Internal(h) norm of U(f).
StepFunction weighting_isometry(const StepFunction& f, const DensityField& h);

struct IsometryReport {
  std::size_t samples = 0;
  double max_abs_deviation = 0.0;
  std::string worst_case;
};

using StepOperator = std::function<StepFunction(const StepFunction&)>;

/// max |norm_src(f) - norm_dst(op(f))| over random step functions drawn on
/// `src`. Sample i uses the stream (seed, i).
IsometryReport verify_isometry(const StepOperator& op, const MeasureSpace& src,
                               const NormKind& src_kind,
                               const MeasureSpace& dst,
                               const NormKind& dst_kind, std::size_t samples,
                               std::uint64_t seed);

IsometryReport verify_transport(const TransportMap& map,
                                const MeasureSpace& src,
                                const MeasureSpace& dst, std::size_t samples,
                                std::uint64_t seed);

IsometryReport verify_weighting(const MeasureSpace& space,
                                const DensityField& h, std::size_t samples,
                                std::uint64_t seed);

/// One line per piece: "src=[p,q) slope=s offset=o". With
/// `with_components`, " component=i->j" is appended.
std::string render_transport(const TransportMap& map, bool with_components);

}  // namespace logspace
