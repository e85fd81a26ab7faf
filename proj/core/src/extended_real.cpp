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

#include "logspace/extended_real.hpp"

#include <cmath>

#include "logspace/error.hpp"

namespace logspace {

ExtendedReal ExtendedReal::finite(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw Error("extended real must be a non-negative number");
  }
  ExtendedReal r;
  r.value_ = value;
  return r;
}

void CompensatedSum::add(double term) {
  const double t = sum_ + term;
  if (std::abs(sum_) >= std::abs(term)) {
    correction_ += (sum_ - t) + term;
  } else {
    correction_ += (term - t) + sum_;
  }
  sum_ = t;
}

void ExtendedSum::add(double term) {
  if (std::isinf(term)) {
    infinite_ = true;
  } else {
    finite_.add(term);
  }
}

void ExtendedSum::add(ExtendedReal term) { add(term.value()); }

ExtendedReal ExtendedSum::total() const {
  if (infinite_) return ExtendedReal::infinite();
  // Compensation can leave a tiny negative total for sums of zeros.
  const double t = finite_.total();
  return ExtendedReal::finite(t < 0.0 ? 0.0 : t);
}

}  // namespace logspace
