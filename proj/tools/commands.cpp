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

#include "commands.hpp"

#include <cstdint>
#include <functional>

#include "CLI11.hpp"

#include "logspace/error.hpp"
#include "logspace/format.hpp"
#include "logspace/isometry.hpp"
#include "logspace/log_norm.hpp"
#include "logspace/passport.hpp"
#include "workspace.hpp"

namespace logspace::cli {
namespace {

constexpr double kIsometryTolerance = 1e-9;

const MeasureSpace& require_space(const Workspace& ws, bool second = false) {
  const auto& space = second ? ws.space2 : ws.space;
  if (!space) {
    throw Error(std::string("workspace has no \"") +
                (second ? "space2" : "space") + "\"");
  }
  return *space;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& map,
                                        const std::string& name) {
  auto it = map.find(name);
  if (it == map.end()) throw Error("unknown name: " + name);
  return it->second;
}

Passport resolve_passport(const Workspace& ws, const std::string& name) {
  if (auto it = ws.passports.find(name); it != ws.passports.end()) {
    return it->second;
  }
  if (name == "space" && ws.space) return build_passport(*ws.space);
  if (name == "space2" && ws.space2) return build_passport(*ws.space2);
  throw Error("unknown name: " + name);
}

const DensityField& require_density(const Workspace& ws,
                                    const std::string& name,
                                    std::string_view flag) {
  if (name.empty()) {
    throw Error("this norm kind requires " + std::string(flag));
  }
  return lookup(ws.densities, name);
}

struct Options {
  std::string file;
  std::string fn;
  std::string kind;
  std::string h;
  std::string h1;
  std::string h2;
  std::string relation;
  std::string left = "space";
  std::string right = "space2";
  std::string target;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

int cmd_norm(const Options& o, std::ostream& out) {
  const Workspace ws = load_workspace(o.file);
  const MeasureSpace& space = require_space(ws);
  const StepFunction& f = lookup(ws.functions, o.fn);
  NormKind kind = External{};
  if (o.kind == "internal") {
    kind = Internal{require_density(ws, o.h, "--h")};
  } else if (o.kind == "generalized") {
    kind = Generalized{require_density(ws, o.h1, "--h1"),
                       require_density(ws, o.h2, "--h2")};
  }
  out << "norm = " << format_real(log_norm(f, space, kind).value()) << "\n";
  return kExitOk;
}

int cmd_passport(const Options& o, std::ostream& out) {
  const Workspace ws = load_workspace(o.file);
  out << render_passport(build_passport(require_space(ws)));
  return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const Workspace ws = load_workspace(o.file);
  const Passport left = resolve_passport(ws, o.left);
  const Passport right = resolve_passport(ws, o.right);
  Decision d;
  if (o.relation == "iso-pair") {
    d = decide_isomorphic_pair(left, right);
  } else if (o.relation == "star-iso") {
    d = decide_star_isomorphic(left, right);
  } else if (o.relation == "isometric") {
    d = decide_isometric_external(left, right);
  } else {
    d = decide_isometric_generalized(left, right);
  }
  out << "verdict = " << (d.verdict ? "true" : "false") << "\n"
      << "rule = " << to_string(d.rule) << "\n"
      << "witness = " << d.witness << "\n";
  return d.verdict ? kExitOk : kExitFalse;
}

int cmd_transport(const Options& o, std::ostream& out) {
  const Workspace ws = load_workspace(o.file);
  const MeasureSpace& src = require_space(ws);
  const MeasureSpace& dst = require_space(ws, true);
  const TransportMap map = transport_between(src, dst);
  out << render_transport(map, src.size() > 1 || dst.size() > 1);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Workspace ws = load_workspace(o.file);
  const MeasureSpace& space = require_space(ws);
  IsometryReport report;
  if (o.target == "transport") {
    const MeasureSpace& dst = require_space(ws, true);
    report = verify_transport(transport_between(space, dst), space, dst,
                              o.samples, o.seed);
  } else {
    const DensityField& h = lookup(ws.densities, o.h.empty() ? "h" : o.h);
    if (!h.matches(space)) throw Error("kind/space mismatch");
    report = verify_weighting(space, h, o.samples, o.seed);
  }
  out << "samples = " << report.samples << "\n"
      << "max_abs_deviation = " << format_real(report.max_abs_deviation)
      << "\n"
      << "worst_case = " << report.worst_case << "\n";
  return report.max_abs_deviation <= kIsometryTolerance ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"F-norms, passports and isometries of log-integrable "
               "function spaces"};
  app.name("logspace");
  app.require_subcommand(1);
  // "--h" names a density, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  const auto add_file = [&o](CLI::App* cmd) {
    cmd->add_option("--file", o.file, "Workspace file (JSON)")->required();
  };

  auto* norm = app.add_subcommand("norm", "Compute an F-norm");
  add_file(norm);
  norm->add_option("--fn", o.fn, "Function name")->required();
  norm->add_option("--kind", o.kind, "external | internal | generalized")
      ->required()
      ->check(CLI::IsMember({"external", "internal", "generalized"}));
  norm->add_option("--h", o.h, "Density for the internal norm");
  norm->add_option("--h1", o.h1, "Outer density for the generalized norm");
  norm->add_option("--h2", o.h2, "Inner density for the generalized norm");

  auto* passport = app.add_subcommand("passport", "Print the passport of \"space\"");
  add_file(passport);

  auto* decide = app.add_subcommand("decide", "Decide a relation between passports");
  add_file(decide);
  decide->add_option("--relation", o.relation,
                     "iso-pair | star-iso | isometric | gen-isometric")
      ->required()
      ->check(CLI::IsMember({"iso-pair", "star-iso", "isometric", "gen-isometric"}));
  decide->add_option("--left", o.left, "Passport name, or space/space2");
  decide->add_option("--right", o.right, "Passport name, or space/space2");

  auto* transport = app.add_subcommand(
      "transport", "Print the measure-preserving map from \"space\" to \"space2\"");
  add_file(transport);

  auto* verify = app.add_subcommand("verify", "Check norm preservation on random samples");
  add_file(verify);
  verify->add_option("--target", o.target, "transport | weighting")
      ->required()
      ->check(CLI::IsMember({"transport", "weighting"}));
  verify->add_option("--samples", o.samples, "Number of random step functions")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--h", o.h, "Density for the weighting isometry (default h)");

  std::vector<std::string> argv_storage{"logspace"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* shown = &app;
    for (const CLI::App* sub : app.get_subcommands()) shown = sub;
    out << shown->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*norm) return cmd_norm(o, out);
    if (*passport) return cmd_passport(o, out);
    if (*decide) return cmd_decide(o, out);
    if (*transport) return cmd_transport(o, out);
    return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace logspace::cli
