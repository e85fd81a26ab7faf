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

#include "logspace/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logspace/error.hpp"
#include "logspace/format.hpp"
#include "logspace/sampling.hpp"
#include "refinement.hpp"

namespace logspace {
namespace {

constexpr double kMassTolerance = 1e-12;

// One density piece of a component, placed on a mass line.
struct Cell {
  std::size_t component = 0;
  double from = 0.0;
  double to = 0.0;
  double rho = 1.0;

  bool bounded() const { return to != kInfinity; }
};

using Line = std::vector<Cell>;

Line line_of(const MeasureSpace& space, std::span<const std::size_t> indices) {
  Line line;
  for (std::size_t index : indices) {
    for (const auto& p : space.components()[index].density().pieces()) {
      line.push_back({index, p.from, p.to, p.value});
    }
  }
  return line;
}

// Mass before the first cell that extends to infinity.
double prefix_mass(const Line& line) {
  double mass = 0.0;
  for (const auto& c : line) {
    if (!c.bounded()) break;
    mass += (c.to - c.from) * c.rho;
  }
  return mass;
}

bool equal_totals(ExtendedReal a, ExtendedReal b) {
  if (a.is_infinite() || b.is_infinite()) return a == b;
  return std::abs(a.value() - b.value()) <=
         kMassTolerance * std::max(a.value(), b.value());
}

AffinePiece make_piece(const Cell& s, double x0, double x1, const Cell& d,
                       double y0, double y1) {
  AffinePiece p;
  p.src_component = s.component;
  p.from = x0;
  p.to = x1;
  p.dst_component = d.component;
  p.image_from = y0;
  p.image_to = y1;
  p.slope = std::isfinite(x1) ? (y1 - y0) / (x1 - x0) : s.rho / d.rho;
  p.offset = y0 - p.slope * x0;
  if (p.offset == 0.0) p.offset = 0.0;  // no negative zero
  return p;
}

// Matches two mass lines of equal total mass left to right. `cuts` are
// increasing line masses at which a piece boundary is forced.
std::vector<AffinePiece> merge_lines(const Line& src, const Line& dst,
                                     const std::vector<double>& cuts) {
  std::vector<AffinePiece> out;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t next_cut = 0;
  double x = src.front().from;
  double y = dst.front().from;
  double mass = 0.0;

  while (i < src.size() && j < dst.size()) {
    const Cell& s = src[i];
    const Cell& d = dst[j];
    while (next_cut < cuts.size() &&
           cuts[next_cut] - mass <= kMassTolerance * std::max(1.0, mass)) {
      ++next_cut;
    }
    const double src_left = s.bounded() ? (s.to - x) * s.rho : kInfinity;
    const double dst_left = d.bounded() ? (d.to - y) * d.rho : kInfinity;
    const double cut_left =
        next_cut < cuts.size() ? cuts[next_cut] - mass : kInfinity;
    const double step = std::min({src_left, dst_left, cut_left});

    if (step == kInfinity) {
      out.push_back(make_piece(s, x, kInfinity, d, y, kInfinity));
      ++i;
      ++j;
      break;
    }

    const double eps = kMassTolerance * std::max(1.0, mass + step);
    const bool final_pair = i + 1 == src.size() && j + 1 == dst.size() &&
                            s.bounded() && d.bounded();
    bool end_src = final_pair || src_left <= step + eps;
    bool end_dst = final_pair || dst_left <= step + eps;
    double x1 = end_src ? s.to : x + step / s.rho;
    double y1 = end_dst ? d.to : y + step / d.rho;
    if (!(x1 < s.to)) {
      end_src = true;
      x1 = s.to;
    }
    if (!(y1 < d.to)) {
      end_dst = true;
      y1 = d.to;
    }
    if (x < x1 && y < y1) out.push_back(make_piece(s, x, x1, d, y, y1));

    mass += step;
    if (cut_left <= step + eps) ++next_cut;
    x = x1;
    y = y1;
    if (end_src && ++i < src.size()) x = src[i].from;
    if (end_dst && ++j < dst.size()) y = dst[j].from;
  }
  if (i < src.size() || j < dst.size()) {
    throw Error("no measure-preserving map");
  }
  return out;
}

// Validates one side of a pair and reports its total measure.
ExtendedReal side_total(const MeasureSpace& space,
                        std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error("pairing incomplete");
  ExtendedSum total;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const auto& c = space.component(indices[k]);
    if (!c.realizable()) throw Error("symbolic component");
    if (c.measure().is_infinite() && k + 1 != indices.size()) {
      throw Error("an infinite-measure component must come last in a pair");
    }
    total.add(c.measure());
  }
  return total.total();
}

std::vector<AffinePiece> transport_pair(const MeasureSpace& src,
                                        const MeasureSpace& dst,
                                        const TransportPair& pair) {
  const ExtendedReal src_total = side_total(src, pair.src);
  const ExtendedReal dst_total = side_total(dst, pair.dst);
  if (!equal_totals(src_total, dst_total)) {
    throw Error("no measure-preserving map");
  }
  const Line src_line = line_of(src, pair.src);
  const Line dst_line = line_of(dst, pair.dst);
  std::vector<double> cuts;
  if (src_total.is_infinite()) {
    // Unit-measure cuts up to the point where both densities are constant;
    // one unbounded piece matches the remaining cuts.
    const double prefix =
        std::ceil(std::max(prefix_mass(src_line), prefix_mass(dst_line)));
    for (double m = 1.0; m <= prefix; m += 1.0) cuts.push_back(m);
  }
  return merge_lines(src_line, dst_line, cuts);
}

void require_realizable(const MeasureSpace& space) {
  for (const auto& c : space.components()) {
    if (!c.realizable()) throw Error("symbolic component");
  }
}

// Image of a point approached from the right (left end of a cell) or from
// the left (right end), clamped to the stored image interval.
double image_left(const AffinePiece& p, double x) {
  if (x == p.from) return p.image_from;
  return std::clamp(p.slope * x + p.offset, p.image_from, p.image_to);
}

double image_right(const AffinePiece& p, double x) {
  if (x == p.to) return p.image_to;
  return std::clamp(p.slope * x + p.offset, p.image_from, p.image_to);
}

}  // namespace

TransportMap::TransportMap(std::vector<AffinePiece> pieces)
    : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const AffinePiece& a, const AffinePiece& b) {
              return a.src_component != b.src_component
                         ? a.src_component < b.src_component
                         : a.from < b.from;
            });
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const auto& p = pieces_[k];
    if (!(p.slope > 0.0) || !std::isfinite(p.slope) || !(p.from < p.to) ||
        !(p.image_from < p.image_to)) {
      throw Error("invalid transport piece");
    }
    if (k > 0 && pieces_[k - 1].src_component == p.src_component &&
        pieces_[k - 1].to > p.from) {
      throw Error("overlapping transport pieces");
    }
  }
}

TransportMap::Point TransportMap::apply(std::size_t component, double x) const {
  for (const auto& p : pieces_) {
    if (p.src_component == component && p.from <= x && x < p.to) {
      return {p.dst_component, image_left(p, x)};
    }
  }
  throw Error("unmapped support");
}

std::vector<std::pair<std::size_t, Interval>> TransportMap::image(
    std::size_t component, Interval interval) const {
  std::vector<std::pair<std::size_t, Interval>> out;
  double covered = interval.from;
  for (const auto& p : pieces_) {
    if (p.src_component != component || p.to <= interval.from) continue;
    if (p.from >= interval.to) break;
    if (p.from > covered) break;
    const double lo = std::max(p.from, interval.from);
    const double hi = std::min(p.to, interval.to);
    const double a = image_left(p, lo);
    const double b = image_right(p, hi);
    if (a < b) out.push_back({p.dst_component, {a, b}});
    covered = hi;
    if (covered >= interval.to) break;
  }
  if (covered < interval.to) throw Error("unmapped support");
  return out;
}

MeasurableSet TransportMap::image(const MeasurableSet& set) const {
  std::vector<std::pair<std::size_t, Interval>> parts;
  for (const auto& [component, intervals] : set.parts()) {
    for (const auto& iv : intervals) {
      auto img = image(component, iv);
      parts.insert(parts.end(), img.begin(), img.end());
    }
  }
  return MeasurableSet(std::move(parts));
}

TransportMap monotone_transport(const Component& src, const Component& dst,
                                std::size_t src_index, std::size_t dst_index) {
  if (!src.realizable() || !dst.realizable()) {
    throw Error("symbolic component");
  }
  if (!equal_totals(src.measure(), dst.measure())) {
    throw Error("no measure-preserving map");
  }
  Line src_line;
  for (const auto& p : src.density().pieces()) {
    src_line.push_back({src_index, p.from, p.to, p.value});
  }
  Line dst_line;
  for (const auto& p : dst.density().pieces()) {
    dst_line.push_back({dst_index, p.from, p.to, p.value});
  }
  return TransportMap(merge_lines(src_line, dst_line, {}));
}

std::vector<double> unit_cuts(const PiecewiseDensity& density,
                              std::size_t count) {
  std::vector<double> out;
  out.reserve(count + 1);
  for (std::size_t k = 0; k <= count; ++k) {
    out.push_back(density.quantile(static_cast<double>(k)));
  }
  return out;
}

TransportMap glue_transports(const MeasureSpace& src, const MeasureSpace& dst,
                             std::span<const TransportPair> pairs) {
  require_realizable(src);
  require_realizable(dst);
  std::vector<int> src_uses(src.size(), 0);
  std::vector<int> dst_uses(dst.size(), 0);
  for (const auto& pair : pairs) {
    for (std::size_t i : pair.src) {
      if (i >= src.size()) throw Error("pairing incomplete");
      ++src_uses[i];
    }
    for (std::size_t i : pair.dst) {
      if (i >= dst.size()) throw Error("pairing incomplete");
      ++dst_uses[i];
    }
  }
  const auto once = [](int n) { return n == 1; };
  if (!std::all_of(src_uses.begin(), src_uses.end(), once) ||
      !std::all_of(dst_uses.begin(), dst_uses.end(), once)) {
    throw Error("pairing incomplete");
  }

  std::vector<AffinePiece> pieces;
  for (const auto& pair : pairs) {
    auto part = transport_pair(src, dst, pair);
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  return TransportMap(std::move(pieces));
}

TransportMap transport_between(const MeasureSpace& src,
                               const MeasureSpace& dst) {
  require_realizable(src);
  require_realizable(dst);
  const auto split = [](const MeasureSpace& space) {
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < space.size(); ++i) {
      (space.components()[i].measure().is_finite() ? out.first : out.second)
          .push_back(i);
    }
    return out;
  };
  auto [src_finite, src_infinite] = split(src);
  auto [dst_finite, dst_infinite] = split(dst);

  if (src_infinite.empty() != dst_infinite.empty()) {
    throw Error("no measure-preserving map");
  }
  if (src_infinite.size() != dst_infinite.size()) {
    throw Error(
        "unsupported: spaces with different numbers of infinite-measure "
        "components");
  }

  std::vector<TransportPair> pairs;
  TransportPair head{src_finite, dst_finite};
  if (!src_infinite.empty()) {
    head.src.push_back(src_infinite.front());
    head.dst.push_back(dst_infinite.front());
  }
  pairs.push_back(std::move(head));
  for (std::size_t k = 1; k < src_infinite.size(); ++k) {
    pairs.push_back({{src_infinite[k]}, {dst_infinite[k]}});
  }
  return glue_transports(src, dst, pairs);
}

StepFunction lift(const TransportMap& map, const StepFunction& f) {
  std::vector<ComponentPiece> out;
  for (const auto& [component, pieces] : f.components()) {
    for (const auto& p : pieces) {
      for (const auto& [dst, iv] : map.image(component, p.interval())) {
        out.push_back({dst, iv.from, iv.to, p.coef});
      }
    }
  }
  return StepFunction(std::move(out));
}

StepFunction weighting_isometry(const StepFunction& f, const DensityField& h) {
  std::vector<ComponentPiece> out;
  for (const auto& [component, pieces] : f.components()) {
    if (component >= h.size()) throw Error("kind/space mismatch");
    const auto& density = h[component];
    for (const auto& p : pieces) {
      if (!density.carrier().contains(p.interval())) {
        throw Error("kind/space mismatch");
      }
    }
    detail::Breakpoints bp;
    bp.add_pieces(std::span<const StepPiece>(pieces));
    bp.add_pieces(density.pieces());
    const auto points = std::move(bp).finish();
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
      const double x = points[k];
      const Complex coef = f.value_at(component, x);
      if (coef == Complex(0.0, 0.0)) continue;
      out.push_back({component, x, points[k + 1], coef / density.value_at(x)});
    }
  }
  return StepFunction(std::move(out));
}

IsometryReport verify_isometry(const StepOperator& op, const MeasureSpace& src,
                               const NormKind& src_kind,
                               const MeasureSpace& dst,
                               const NormKind& dst_kind, std::size_t samples,
                               std::uint64_t seed) {
  if (samples < 1) throw Error("samples must be positive");
  IsometryReport report;
  report.samples = samples;
  report.worst_case = "none";
  for (std::size_t i = 0; i < samples; ++i) {
    SampleRng rng(seed, i);
    const StepFunction f = random_step_function(src, rng);
    const ExtendedReal a = log_norm(f, src, src_kind);
    const ExtendedReal b = log_norm(op(f), dst, dst_kind);
    double deviation = 0.0;
    if (a.is_infinite() != b.is_infinite()) {
      deviation = kInfinity;
    } else if (a.is_finite()) {
      deviation = std::abs(a.value() - b.value());
    }
    if (deviation > report.max_abs_deviation || i == 0) {
      report.max_abs_deviation = deviation;
      report.worst_case = "sample " + std::to_string(i) + ": source norm " +
                          format_real(a.value()) + ", image norm " +
                          format_real(b.value());
    }
  }
  return report;
}

IsometryReport verify_transport(const TransportMap& map,
                                const MeasureSpace& src,
                                const MeasureSpace& dst, std::size_t samples,
                                std::uint64_t seed) {
  return verify_isometry([&map](const StepFunction& f) { return lift(map, f); },
                         src, External{}, dst, External{}, samples, seed);
}

IsometryReport verify_weighting(const MeasureSpace& space,
                                const DensityField& h, std::size_t samples,
                                std::uint64_t seed) {
  return verify_isometry(
      [&h](const StepFunction& f) { return weighting_isometry(f, h); }, space,
      External{}, space, Internal{h}, samples, seed);
}

std::string render_transport(const TransportMap& map, bool with_components) {
  std::ostringstream os;
  for (const auto& p : map.pieces()) {
    os << "src=[" << format_real(p.from) << "," << format_real(p.to)
       << ") slope=" << format_real(p.slope)
       << " offset=" << format_real(p.offset);
    if (with_components) {
      os << " component=" << p.src_component << "->" << p.dst_component;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace logspace
