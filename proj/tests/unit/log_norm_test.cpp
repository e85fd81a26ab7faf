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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "logspace/error.hpp"

namespace logspace {
namespace {

constexpr double kE1 = std::numbers::e - 1;

MeasureSpace unit_interval() {
  return MeasureSpace({Component(WeightLabel{0}, PiecewiseDensity::constant({0, 1}, 1.0))});
}

DensityField constant_field(double value) {
  return DensityField({PiecewiseDensity::constant({0, 1}, value)});
}

TEST(LogNorm, ZeroFunctionHasZeroNormForEveryKind) {
  const auto space = unit_interval();
  for (const NormKind& kind : {NormKind(External{}), NormKind(Internal{constant_field(3)}),
                               NormKind(Generalized{constant_field(2), constant_field(5)})}) {
    EXPECT_EQ(log_norm(StepFunction(), space, kind), ExtendedReal::finite(0));
  }
}

TEST(LogNorm, WorkedExamples) {
  const auto space = unit_interval();
  EXPECT_EQ(log_norm(StepFunction::indicator(0, {0, 1}, kE1), space, External{}).value(), 1.0);
  const StepFunction steps({{0, 0, 0.5, 3.0}, {0, 0.5, 1, 1.0}});
  EXPECT_NEAR(log_norm(steps, space, External{}).value(), 1.5 * std::numbers::ln2, 1e-15);
  EXPECT_NEAR(log_norm(StepFunction::indicator(0, {0, 1}, kE1 / 2), space,
                       Internal{constant_field(2)}).value(),
              1.0, 1e-15);
  EXPECT_NEAR(log_norm(StepFunction::indicator(0, {0, 1}, 2.0), space,
                       Generalized{constant_field(2), constant_field(0.5)}).value(),
              2 * std::numbers::ln2, 1e-15);
}

TEST(LogNorm, InfiniteOnInfiniteMeasureSupport) {
  const MeasureSpace half_line(
      {Component(WeightLabel{0}, PiecewiseDensity::constant({0, kInfinity}, 1.0))});
  const StepFunction everywhere({{0, 0, kInfinity, 1.0}});
  EXPECT_TRUE(log_norm(everywhere, half_line, External{}).is_infinite());
  EXPECT_FALSE(is_member(everywhere, half_line, External{}));
  EXPECT_TRUE(is_member(StepFunction::indicator(0, {3, 7}, 1.0), half_line, External{}));
  EXPECT_TRUE(is_member(StepFunction(), half_line, External{}));
}

TEST(LogNorm, RejectsMismatchedDensities) {
  const DensityField wrong({PiecewiseDensity::constant({0, 2}, 1.0)});
  try {
    log_norm(StepFunction::indicator(0, {0, 1}), unit_interval(), Internal{wrong});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "kind/space mismatch");
  }
}

TEST(Distance, Examples) {
  const auto space = unit_interval();
  const auto f = StepFunction::indicator(0, {0, 0.5}, 3.0);
  const auto g = StepFunction::indicator(0, {0, 0.5}, 1.0);
  EXPECT_EQ(distance(f, f, space, External{}).value(), 0.0);
  EXPECT_EQ(distance(f, StepFunction(), space, External{}), log_norm(f, space, External{}));
  EXPECT_NEAR(distance(f, g, space, External{}).value(), 0.5 * std::log(3.0), 1e-15);
}

TEST(LogNorm, ProductOfConstantsExample) {
  const auto space = unit_interval();
  const auto f = StepFunction::indicator(0, {0, 1}, kE1);
  const double product = log_norm(multiply(f, f), space, External{}).value();
  // log(1 + (e-1)^2) evaluated directly.
  EXPECT_NEAR(product, 1.3743463778953757, 1e-15);
  EXPECT_LE(product, 2.0);
}

TEST(RiemannOracle, Examples) {
  const auto space = unit_interval();
  EXPECT_EQ(riemann_oracle(StepFunction(), space, External{}, 10), 0.0);
  EXPECT_NEAR(riemann_oracle(StepFunction::indicator(0, {0, 1}, kE1), space, External{}, 1000000),
              1.0, 1e-9);
  const StepFunction steps({{0, 0, 0.5, 3.0}, {0, 0.5, 1, 1.0}});
  EXPECT_NEAR(riemann_oracle(steps, space, External{}, 1000000), 1.5 * std::numbers::ln2, 1e-6);
}

TEST(RiemannOracle, RequiresBoundedSupport) {
  const MeasureSpace half_line(
      {Component(WeightLabel{0}, PiecewiseDensity::constant({0, kInfinity}, 1.0))});
  try {
    riemann_oracle(StepFunction({{0, 0, kInfinity, 1.0}}), half_line, External{}, 10);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "oracle requires bounded support");
  }
}

TEST(LogNormProperty, MatchesDirectCellSum) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    SampleRng rng(seed, 31);
    const auto space = testing::random_space(rng, {.symbolic = true});
    const auto f = testing::random_function(rng, space);
    const auto kind = testing::random_kind(rng, space);
    const double expected = testing::direct_norm(f, space, kind);
    EXPECT_NEAR(log_norm(f, space, kind).value(), expected, 1e-9 * (1 + expected))
        << "seed " << seed;
  }
}

TEST(LogNormProperty, KindDegeneracies) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SampleRng rng(seed, 32);
    const auto space = testing::random_space(rng);
    const auto f = testing::random_function(rng, space);
    const auto h = testing::random_field(rng, space);
    const auto one = DensityField::unit(space);
    EXPECT_EQ(log_norm(f, space, Internal{one}), log_norm(f, space, External{}));
    EXPECT_EQ(log_norm(f, space, Generalized{one, h}), log_norm(f, space, Internal{h}));
  }
}

TEST(LogNormProperty, MonotoneInModulus) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SampleRng rng(seed, 33);
    const auto space = testing::random_space(rng);
    const auto g = testing::random_function(rng, space);
    std::vector<ComponentPiece> smaller;
    for (auto p : g.to_pieces()) {
      p.coef *= rng.uniform();
      smaller.push_back(p);
    }
    const auto kind = testing::random_kind(rng, space);
    EXPECT_LE(log_norm(StepFunction(smaller), space, kind).value(),
              log_norm(g, space, kind).value() + 1e-12);
  }
}

TEST(LogNormProperty, OracleAgreementOnLatticeCases) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SampleRng rng(seed, 34);
    const auto space = testing::random_space(rng, {.infinite_probability = 0.3, .lattice = true});
    const auto f = testing::random_function(rng, space, true);
    const auto kind = testing::random_kind(rng, space, true);
    EXPECT_NEAR(log_norm(f, space, kind).value(), riemann_oracle(f, space, kind, 100000), 1e-6)
        << "seed " << seed;
  }
}

}  // namespace
}  // namespace logspace
