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
#include <limits>

namespace logspace {

/// A value in [0, +inf]. Measures and F-norms live here.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;

  /// Throws logspace::Error for negative or NaN input.
  static ExtendedReal finite(double value);
  static constexpr ExtendedReal infinite() {
    ExtendedReal r;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }

  constexpr bool is_finite() const {
    return value_ != std::numeric_limits<double>::infinity();
  }
  constexpr bool is_infinite() const { return !is_finite(); }

  /// The finite value, or +inf.
  constexpr double value() const { return value_; }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    ExtendedReal r;
    r.value_ = a.value_ + b.value_;
    return r;
  }
  ExtendedReal& operator+=(ExtendedReal other) { return *this = *this + other; }

  friend constexpr bool operator==(ExtendedReal, ExtendedReal) = default;
  friend constexpr auto operator<=>(ExtendedReal a, ExtendedReal b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
};

/// Neumaier-compensated sum of doubles.
class CompensatedSum {
 public:
  void add(double term);
  double total() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

/// Compensated sum of extended reals; any infinite term makes the total
/// infinite.
class ExtendedSum {
 public:
  void add(double term);
  void add(ExtendedReal term);
  ExtendedReal total() const;

 private:
  CompensatedSum finite_;
  bool infinite_ = false;
};

}  // namespace logspace
