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

#include "logspace/log_norm.hpp"

#include <cmath>

#include "logspace/error.hpp"
#include "refinement.hpp"

namespace logspace {
namespace {

// The three kinds share one integrand: w(x) log(1 + v(x) |f(x)|) dmu, with
// w = v = 1 for External, w = 1 for Internal.
struct Weights {
  const DensityField* outer = nullptr;  // h1
  const DensityField* inner = nullptr;  // h, h2
};

Weights weights_for(const NormKind& kind, const MeasureSpace& space) {
  Weights w;
  if (const auto* k = std::get_if<Internal>(&kind)) {
    w.inner = &k->h;
  } else if (const auto* k = std::get_if<Generalized>(&kind)) {
    w.outer = &k->h1;
    w.inner = &k->h2;
  }
  if ((w.outer && !w.outer->matches(space)) ||
      (w.inner && !w.inner->matches(space))) {
    throw Error("kind/space mismatch");
  }
  return w;
}

// Forward-only lookup for increasing query points.
template <class Piece>
class Cursor {
 public:
  explicit Cursor(std::span<const Piece> pieces) : pieces_(pieces) {}

  const Piece* at(double x) {
    while (next_ < pieces_.size() && pieces_[next_].to <= x) ++next_;
    if (next_ < pieces_.size() && pieces_[next_].from <= x) {
      return &pieces_[next_];
    }
    return nullptr;
  }

 private:
  std::span<const Piece> pieces_;
  std::size_t next_ = 0;
};

}  // namespace

ExtendedReal log_norm(const StepFunction& f, const MeasureSpace& space,
                      const NormKind& kind) {
  check_defined_on(f, space);
  const Weights w = weights_for(kind, space);

  ExtendedSum sum;
  for (const auto& [index, pieces] : f.components()) {
    const auto& dmu = space.components()[index].density();
    const PiecewiseDensity* outer = w.outer ? &(*w.outer)[index] : nullptr;
    const PiecewiseDensity* inner = w.inner ? &(*w.inner)[index] : nullptr;

    detail::Breakpoints bp;
    bp.add_pieces(std::span<const StepPiece>(pieces));
    bp.add_pieces(dmu.pieces());
    if (outer) bp.add_pieces(outer->pieces());
    if (inner) bp.add_pieces(inner->pieces());
    const auto points = std::move(bp).finish();

    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
      const double x = points[k];
      const Complex coef = f.value_at(index, x);
      if (coef == Complex(0.0, 0.0)) continue;
      const double h1 = outer ? outer->value_at(x) : 1.0;
      const double h2 = inner ? inner->value_at(x) : 1.0;
      const double length = points[k + 1] - x;
      sum.add(length * (dmu.value_at(x) * h1) * std::log1p(h2 * std::abs(coef)));
    }
  }
  return sum.total();
}

bool is_member(const StepFunction& f, const MeasureSpace& space,
               const NormKind& kind) {
  return log_norm(f, space, kind).is_finite();
}

ExtendedReal distance(const StepFunction& f, const StepFunction& g,
                      const MeasureSpace& space, const NormKind& kind) {
  return log_norm(subtract(f, g), space, kind);
}

double riemann_oracle(const StepFunction& f, const MeasureSpace& space,
                      const NormKind& kind, long subdivisions_per_unit) {
  if (subdivisions_per_unit < 1) throw Error("subdivisions must be positive");
  check_defined_on(f, space);
  const Weights w = weights_for(kind, space);
  const double s = static_cast<double>(subdivisions_per_unit);

  CompensatedSum sum;
  for (const auto& [index, pieces] : f.components()) {
    const double lo = pieces.front().from;
    const double hi = pieces.back().to;
    if (!std::isfinite(hi)) throw Error("oracle requires bounded support");

    Cursor<StepPiece> fc(pieces);
    Cursor<IntervalPiece> dc(space.components()[index].density().pieces());
    Cursor<IntervalPiece> oc(w.outer ? (*w.outer)[index].pieces()
                                     : std::span<const IntervalPiece>{});
    Cursor<IntervalPiece> ic(w.inner ? (*w.inner)[index].pieces()
                                     : std::span<const IntervalPiece>{});

    const long first = static_cast<long>(std::floor(lo * s));
    const long last = static_cast<long>(std::ceil(hi * s));
    for (long i = first; i < last; ++i) {
      const double a = std::max(lo, static_cast<double>(i) / s);
      const double b = std::min(hi, static_cast<double>(i + 1) / s);
      if (!(a < b)) continue;
      // Rounding can push the midpoint of a sliver cell onto its right end.
      double mid = 0.5 * (a + b);
      if (!(mid < b)) mid = a;
      const auto* fp = fc.at(mid);
      if (!fp) continue;
      const double d = dc.at(mid)->value;
      const double h1 = w.outer ? oc.at(mid)->value : 1.0;
      const double h2 = w.inner ? ic.at(mid)->value : 1.0;
      sum.add((b - a) * d * h1 * std::log1p(h2 * std::abs(fp->coef)));
    }
  }
  return sum.total();
}

}  // namespace logspace
