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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "curated.hpp"
#include "generators.hpp"
#include "logspace/error.hpp"
#include "logspace/isometry.hpp"
#include "logspace/log_norm.hpp"
#include "logspace/passport.hpp"

namespace {

using namespace logspace;
using testing::random_field;
using testing::random_function;
using testing::random_space;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst value of a quantity that must stay at or below a bound.
struct Worst {
  double value = 0.0;
  std::string where;

  void update(double v, const std::string& context) {
    if (v > value || std::isnan(v)) {
      value = v;
      where = context;
    }
  }
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

NormKind kind_number(int which, SampleRng& rng, const MeasureSpace& space,
                     bool lattice = false) {
  switch (which) {
    case 0:
      return External{};
    case 1:
      return Internal{random_field(rng, space, 4, lattice)};
    default: {
      auto h1 = random_field(rng, space, 4, lattice);
      auto h2 = random_field(rng, space, 4, lattice);
      return Generalized{std::move(h1), std::move(h2)};
    }
  }
}

DensityField product_field(const DensityField& a, const MeasureSpace& space) {
  std::vector<PiecewiseDensity> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    out.push_back(multiply(a[i], space.component(i).density()));
  }
  return DensityField(std::move(out));
}

Outcome fnorm_axioms() {
  constexpr int kCases = 10000;
  const auto start = std::chrono::steady_clock::now();
  Worst positivity, homogeneity, decay, final_norm, triangle;
  int kind_counts[3] = {0, 0, 0};
  for (int n = 0; n < kCases; ++n) {
    SampleRng rng(n, 101);
    const std::string at = fmt("case %d", n);
    const auto space = random_space(rng, {.symbolic = true});
    const auto f = random_function(rng, space);
    const auto g = random_function(rng, space);
    const int which = n % 3;
    ++kind_counts[which];
    const auto kind = kind_number(which, rng, space);

    const double nf = log_norm(f, space, kind).value();
    const double ng = log_norm(g, space, kind).value();
    if (nf < 0.0 || (nf == 0.0) != f.is_zero()) positivity.update(1.0, at);
    if (log_norm(StepFunction(), space, kind).value() != 0.0) positivity.update(1.0, at);

    for (double alpha : {rng.uniform(-1.0, 1.0), 1.0, -1.0, 0.0}) {
      homogeneity.update(log_norm(scale(f, alpha), space, kind).value() - nf, at);
    }

    double previous = nf;
    for (int k = 1; k <= 40; ++k) {
      const double current = log_norm(scale(f, std::ldexp(1.0, -k)), space, kind).value();
      decay.update(current - previous, at);
      previous = current;
    }
    final_norm.update(previous, at);

    triangle.update(log_norm(add(f, g), space, kind).value() - nf - ng, at);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = positivity.value == 0.0 && homogeneity.value <= 1e-12 && decay.value <= 1e-12 &&
           final_norm.value < 1e-6 &&
           triangle.value <= 1e-9 && seconds <= 60.0;
  o.detail = fmt("%d cases (%d/%d/%d external/internal/generalized), ", kCases, kind_counts[0],
                 kind_counts[1], kind_counts[2]) +
             fmt("positivity failures %g, max homogeneity excess %.3g, max decay excess %.3g, "
                 "largest norm at k=40 %.3g, max triangle excess %.3g, %.1fs",
                 positivity.value, homogeneity.value, decay.value, final_norm.value,
                 triangle.value, seconds);
  return o;
}

Outcome algebra_closure() {
  constexpr int kCases = 10000;
  Worst product;
  int closure_failures = 0;
  for (int n = 0; n < kCases; ++n) {
    SampleRng rng(n, 102);
    const auto space = random_space(rng);
    const auto f = random_function(rng, space);
    const auto g = random_function(rng, space);
    const double nf = log_norm(f, space, External{}).value();
    const double ng = log_norm(g, space, External{}).value();
    product.update(log_norm(multiply(f, g), space, External{}).value() - nf - ng,
                   fmt("case %d", n));
    const auto kind = kind_number(n % 3, rng, space);
    const Complex alpha = testing::random_complex(rng, 5.0);
    for (const auto& h : {add(f, g), multiply(f, g), scale(f, alpha)}) {
      if (!is_member(f, space, kind) || !is_member(g, space, kind) ||
          !is_member(h, space, kind)) {
        ++closure_failures;
      }
    }
  }
  Outcome o;
  o.pass = product.value <= 1e-9 && closure_failures == 0;
  o.detail = fmt("%d cases, max excess of |fg| over |f|+|g| %.3g, membership failures %d",
                 kCases, product.value, closure_failures);
  return o;
}

Outcome change_of_measure() {
  constexpr int kConfigs = 1000;
  Worst eq1, integral, generalized, derivative;
  for (int n = 0; n < kConfigs; ++n) {
    SampleRng rng(n, 103);
    const std::string at = fmt("config %d", n);
    const auto mu = random_space(rng);
    const auto h = random_field(rng, mu);
    const auto nu = mu.with_densities(product_field(h, mu));

    const auto recovered = rn_derivative(nu, mu);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (const auto& p : h[i].pieces()) {
        derivative.update(relative_gap(recovered[i].value_at(p.from), p.value), at);
      }
    }

    for (int k = 0; k < 5; ++k) {
      const auto f = random_function(rng, mu);
      const std::vector<const DensityField*> fields{&h};
      const double lhs = log_norm(f, nu, External{}).value();
      const double rhs = testing::cell_integral(mu, f, fields, [&](std::size_t i, double x) {
        return h[i].value_at(x) * std::log1p(std::abs(f.value_at(i, x)));
      });
      eq1.update(relative_gap(lhs, rhs), at);

      std::vector<PiecewiseFunction> plain;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        std::vector<IntervalPiece> pieces;
        for (const auto& p : f.pieces(i)) pieces.push_back({p.from, p.to, std::abs(p.coef)});
        plain.emplace_back(std::move(pieces));
      }
      const double over_nu = integrate_piecewise(nu, plain).value();
      const double weighted = testing::cell_integral(mu, f, fields, [&](std::size_t i, double x) {
        return h[i].value_at(x) * std::abs(f.value_at(i, x));
      });
      integral.update(relative_gap(over_nu, weighted), at);

      const auto h2 = random_field(rng, mu);
      const double gen = log_norm(f, mu, Generalized{h, h2}).value();
      const double internal = log_norm(f, nu, Internal{h2}).value();
      generalized.update(relative_gap(gen, internal), at);
    }
  }
  Outcome o;
  o.pass = eq1.value <= 1e-9 && integral.value <= 1e-9 && generalized.value <= 1e-9 &&
           derivative.value <= 1e-9;
  o.detail = fmt("%d configs x 5 functions, max relative gaps: norm identity %.3g, "
                 "integral identity %.3g, generalized reduction %.3g, derivative %.3g",
                 kConfigs, eq1.value, integral.value, generalized.value, derivative.value);
  return o;
}

Outcome weighting() {
  constexpr int kPairs = 1000;
  Worst deviation;
  for (int n = 0; n < kPairs; ++n) {
    SampleRng rng(n, 104);
    const auto space = random_space(rng);
    const auto h = random_field(rng, space);
    const auto f = random_function(rng, space);
    const double external = log_norm(f, space, External{}).value();
    const double internal = log_norm(weighting_isometry(f, h), space, Internal{h}).value();
    deviation.update(std::abs(external - internal), fmt("pair %d", n));
  }
  Outcome o;
  o.pass = deviation.value <= 1e-9;
  o.detail = fmt("%d (f, h) pairs, max |ext(f) - int_h(f/h)| %.3g", kPairs, deviation.value);
  if (!o.pass) o.detail += " at " + deviation.where;
  return o;
}

Outcome transport() {
  constexpr int kPairs = 100;
  constexpr int kSets = 1000;
  constexpr std::size_t kFunctions = 1000;
  Worst measure_gap, norm_gap;
  int failures = 0;
  int infinite_pairs = 0;
  for (int n = 0; n < kPairs; ++n) {
    SampleRng rng(n, 105);
    const auto [src, dst] = testing::random_equal_passport_pair(rng);
    if (total_measure(src).is_infinite()) ++infinite_pairs;
    const std::string at = fmt("pair %d", n);
    if (!decide_isometric_external(build_passport(src), build_passport(dst)).verdict) {
      ++failures;
      continue;
    }
    TransportMap map;
    try {
      map = transport_between(src, dst);
    } catch (const Error&) {
      ++failures;
      continue;
    }
    for (int k = 0; k < kSets; ++k) {
      const auto set = testing::random_set(rng, src);
      const double a = measure(src, set).value();
      measure_gap.update(std::abs(measure(dst, map.image(set)).value() - a) / (1 + a), at);
    }
    norm_gap.update(verify_transport(map, src, dst, kFunctions, n).max_abs_deviation, at);
  }
  Outcome o;
  o.pass = failures == 0 && measure_gap.value <= 1e-9 && norm_gap.value <= 1e-9;
  o.detail = fmt("%d pairs (%d of infinite measure), construction failures %d, "
                 "max scaled measure gap %.3g, max norm gap %.3g",
                 kPairs, infinite_pairs, failures, measure_gap.value, norm_gap.value);
  return o;
}

Outcome decision_table() {
  const auto cases = testing::curated_cases();
  int mismatches = 0;
  std::string first;
  for (const auto& c : cases) {
    bool ok = false;
    try {
      const Decision d = testing::run_relation(c.relation, c.left, c.right);
      ok = !c.error && d.verdict == c.verdict && d.rule == c.rule && !d.witness.empty() &&
           d.witness.find(c.witness_part) != std::string::npos;
    } catch (const Error& e) {
      ok = c.error && *c.error == e.what();
    }
    if (!ok) {
      ++mismatches;
      if (first.empty()) first = c.name;
    }
  }
  const auto family = testing::growth_family();
  int table_mismatches = 0;
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (ratio_bounded(a, b) != testing::bounded_by_terms(a, b, 1000000)) ++table_mismatches;
    }
  }
  Outcome o;
  o.pass = cases.size() >= 24 && mismatches == 0 && table_mismatches == 0;
  o.detail = fmt("%zu curated pairs, %d mismatches; %zu ordered sequence pairs checked to "
                 "index 1e6, %d disagreements",
                 cases.size(), mismatches, family.size() * family.size(), table_mismatches);
  if (!first.empty()) o.detail += "; first mismatch " + first;
  return o;
}

Outcome oracle_agreement() {
  constexpr int kCases = 1000;
  Worst gap;
  for (int n = 0; n < kCases; ++n) {
    SampleRng rng(n, 107);
    const auto space = random_space(rng, {.infinite_probability = 0.2, .lattice = true});
    const auto f = random_function(rng, space, true);
    const auto kind = kind_number(n % 3, rng, space, true);
    const double closed = log_norm(f, space, kind).value();
    gap.update(std::abs(closed - riemann_oracle(f, space, kind, 100000)), fmt("case %d", n));
  }
  Outcome o;
  o.pass = gap.value <= 1e-6;
  o.detail = fmt("%d lattice-aligned cases at 1e5 cells per unit, max abs gap %.3g", kCases,
                 gap.value);
  if (!o.pass) o.detail += " at " + gap.where;
  return o;
}

Outcome worked_constants() {
  const MeasureSpace space(
      {Component(WeightLabel{0}, PiecewiseDensity::constant({0, 1}, 1.0))});
  const double a =
      log_norm(StepFunction::indicator(0, {0, 1}, std::numbers::e - 1), space, External{})
          .value();
  const double b =
      log_norm(StepFunction({{0, 0, 0.5, 3.0}, {0, 0.5, 1, 1.0}}), space, External{}).value();
  const DensityField h({PiecewiseDensity({{0, 0.5, 2}, {0.5, 1, 4}})});
  const auto f = StepFunction::indicator(0, {0, 1}, 2.0);
  const double c_left = log_norm(f, space, External{}).value();
  const double c_right = log_norm(weighting_isometry(f, h), space, Internal{h}).value();
  const double ln3 = std::log(3.0);
  const double worst = std::max({std::abs(a - 1.0), std::abs(b - 1.5 * std::numbers::ln2),
                                 std::abs(c_left - ln3), std::abs(c_right - ln3)});
  Outcome o;
  o.pass = worst <= 1e-12;
  o.detail = fmt("%.17g, %.17g, %.17g = %.17g, max error %.3g", a, b, c_left, c_right, worst);
  return o;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_goldens() {
  const std::filesystem::path golden = LOGSPACE_GOLDEN;
  const auto previous = std::filesystem::current_path();
  std::filesystem::current_path(LOGSPACE_FIXTURES);
  std::ifstream manifest(golden / "cases.txt");
  int cases = 0;
  int failures = 0;
  std::string first;
  int exit_counts[3] = {0, 0, 0};
  for (std::string line; std::getline(manifest, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name;
    int expected = 0;
    fields >> name >> expected;
    std::vector<std::string> args{std::istream_iterator<std::string>(fields), {}};
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    ++cases;
    if (expected >= 0 && expected <= 2) ++exit_counts[expected];
    bool ok = code == expected && out.str() == read_file(golden / (name + ".out"));
    const auto err_path = golden / (name + ".err");
    if (std::filesystem::exists(err_path)) ok = ok && err.str() == read_file(err_path);
    if (!ok) {
      ++failures;
      if (first.empty()) first = name;
    }
  }
  std::filesystem::current_path(previous);
  Outcome o;
  o.pass = cases > 0 && failures == 0 && exit_counts[0] && exit_counts[1] && exit_counts[2];
  o.detail = fmt("%d golden runs (exit 0/1/2: %d/%d/%d), %d mismatches", cases, exit_counts[0],
                 exit_counts[1], exit_counts[2], failures);
  if (!first.empty()) o.detail += "; first mismatch " + first;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"F-norm axioms", fnorm_axioms},
      {"algebra closure", algebra_closure},
      {"change of measure", change_of_measure},
      {"weighting isometry", weighting},
      {"transport isometry", transport},
      {"decision truth table", decision_table},
      {"oracle agreement", oracle_agreement},
      {"worked constants", worked_constants},
      {"CLI golden reports", cli_goldens},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected error: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %zu %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
