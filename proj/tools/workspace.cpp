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

#include "workspace.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "logspace/error.hpp"

namespace logspace::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error("invalid field " + (path.empty() ? std::string("/") : path) +
              ": " + message);
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(child(path, key), "unknown key");
  }
}

const json& require(const json& j, std::string_view key,
                    const std::string& path) {
  auto it = j.find(std::string(key));
  if (it == j.end()) fail(child(path, key), "missing");
  return *it;
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double bound(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinity;
    fail(path, "expected a number or \"inf\"");
  }
  return number(j, path);
}

json bound_to_json(double x) {
  if (x == kInfinity) return "inf";
  return x;
}

std::size_t index_field(const json& j, std::string_view key,
                        const std::string& path) {
  auto it = j.find(std::string(key));
  if (it == j.end()) return 0;
  if (!it->is_number_unsigned()) {
    fail(child(path, key), "expected a non-negative integer");
  }
  return it->get<std::size_t>();
}

template <class Build>
auto guarded(const std::string& path, Build build) {
  try {
    return build();
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::vector<IntervalPiece> density_pieces(const json& j,
                                          const std::string& path) {
  std::vector<IntervalPiece> out;
  require_array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = child(path, i);
    check_keys(j[i], p, {"from", "to", "value"});
    out.push_back({bound(require(j[i], "from", p), child(p, "from")),
                   bound(require(j[i], "to", p), child(p, "to")),
                   number(require(j[i], "value", p), child(p, "value"))});
  }
  return out;
}

MeasureSpace parse_space(const json& j, const std::string& path) {
  require_array(j, path);
  if (j.empty()) fail(path, "a space needs at least one component");
  std::vector<Component> components;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = child(path, i);
    check_keys(j[i], p, {"weight", "carrier", "density"});
    const json& weight = require(j[i], "weight", p);
    if (!weight.is_number_unsigned()) {
      fail(child(p, "weight"), "expected a non-negative integer");
    }
    const json& carrier = require(j[i], "carrier", p);
    if (!carrier.is_array() || carrier.size() != 2) {
      fail(child(p, "carrier"), "expected [from, to]");
    }
    const Interval span{bound(carrier[0], child(p, "carrier/0")),
                        bound(carrier[1], child(p, "carrier/1"))};
    const std::string dp = child(p, "density");
    auto pieces = density_pieces(require(j[i], "density", p), dp);
    auto density = guarded(dp, [&] { return PiecewiseDensity(pieces); });
    if (density.carrier() != span) {
      fail(child(p, "carrier"), "carrier does not match the density pieces");
    }
    components.emplace_back(WeightLabel{weight.get<unsigned>()},
                            std::move(density));
  }
  return MeasureSpace(std::move(components));
}

StepFunction parse_function(const json& j, const std::string& path) {
  require_array(j, path);
  std::vector<ComponentPiece> pieces;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = child(path, i);
    check_keys(j[i], p, {"component", "from", "to", "re", "im"});
    ComponentPiece piece;
    piece.component = index_field(j[i], "component", p);
    piece.from = bound(require(j[i], "from", p), child(p, "from"));
    piece.to = bound(require(j[i], "to", p), child(p, "to"));
    const double re = number(require(j[i], "re", p), child(p, "re"));
    const double im =
        j[i].contains("im") ? number(j[i]["im"], child(p, "im")) : 0.0;
    piece.coef = Complex(re, im);
    pieces.push_back(piece);
  }
  return guarded(path, [&] { return StepFunction(std::move(pieces)); });
}

DensityField parse_density(const json& j, const std::string& path) {
  require_array(j, path);
  std::map<std::size_t, std::vector<IntervalPiece>> grouped;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = child(path, i);
    check_keys(j[i], p, {"component", "from", "to", "value"});
    grouped[index_field(j[i], "component", p)].push_back(
        {bound(require(j[i], "from", p), child(p, "from")),
         bound(require(j[i], "to", p), child(p, "to")),
         number(require(j[i], "value", p), child(p, "value"))});
  }
  if (grouped.empty()) fail(path, "a density needs at least one piece");
  std::vector<PiecewiseDensity> per_component;
  std::size_t expected = 0;
  for (auto& [component, pieces] : grouped) {
    if (component != expected++) {
      fail(path, "density components must be numbered 0, 1, ... without gaps");
    }
    per_component.push_back(
        guarded(path, [&] { return PiecewiseDensity(std::move(pieces)); }));
  }
  return DensityField(std::move(per_component));
}

std::vector<WeightLabel> parse_labels(const json& j, const std::string& path) {
  require_array(j, path);
  std::vector<WeightLabel> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned()) {
      fail(child(path, i), "expected a non-negative integer");
    }
    out.push_back({j[i].get<unsigned>()});
  }
  return out;
}

Passport parse_passport(const json& j, const std::string& path) {
  check_keys(j, path, {"s", "u", "m"});
  auto row_s = parse_labels(require(j, "s", path), child(path, "s"));
  const json& m = require(j, "m", path);
  const std::string mp = child(path, "m");

  if (m.is_object()) {
    check_keys(m, mp, {"kind", "params"});
    const json& kind = require(m, "kind", mp);
    if (!kind.is_string()) fail(child(mp, "kind"), "expected a string");
    const json& params = require_array(require(m, "params", mp),
                                       child(mp, "params"));
    std::vector<double> values;
    for (std::size_t i = 0; i < params.size(); ++i) {
      values.push_back(number(params[i], child(mp, "params/" + std::to_string(i))));
    }
    if (j.contains("u") && !(j["u"].is_array() && j["u"].empty())) {
      fail(child(path, "u"),
           "must be omitted or empty when \"m\" is a rule (labels 0 1 2 ...)");
    }
    return guarded(path, [&] {
      return Passport(std::move(row_s), {},
                      ClosedForm(parse_seq_kind(kind.get<std::string>()),
                                 std::move(values)));
    });
  }

  auto row_u = parse_labels(require(j, "u", path), child(path, "u"));
  require_array(m, mp);
  FiniteList list;
  for (std::size_t i = 0; i < m.size(); ++i) {
    list.values.push_back(number(m[i], child(mp, i)));
  }
  return guarded(path, [&] {
    return Passport(std::move(row_s), std::move(row_u), std::move(list));
  });
}

json space_to_json(const MeasureSpace& space) {
  json out = json::array();
  for (const auto& c : space.components()) {
    json density = json::array();
    for (const auto& p : c.density().pieces()) {
      density.push_back({{"from", bound_to_json(p.from)},
                         {"to", bound_to_json(p.to)},
                         {"value", p.value}});
    }
    out.push_back({{"weight", c.weight().index},
                   {"carrier", json::array({bound_to_json(c.carrier().from),
                                            bound_to_json(c.carrier().to)})},
                   {"density", std::move(density)}});
  }
  return out;
}

json labels_to_json(const std::vector<WeightLabel>& row) {
  json out = json::array();
  for (const auto& w : row) out.push_back(w.index);
  return out;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Workspace parse_workspace(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error("parse error at " + line_column(text, e.byte) + ": " +
                "malformed JSON");
  }
  check_keys(root, "",
             {"space", "space2", "functions", "densities", "passports"});

  Workspace ws;
  if (root.contains("space")) ws.space = parse_space(root["space"], "/space");
  if (root.contains("space2")) {
    ws.space2 = parse_space(root["space2"], "/space2");
  }
  if (root.contains("functions")) {
    const json& fns = root["functions"];
    if (!fns.is_object()) fail("/functions", "expected an object");
    for (const auto& [name, value] : fns.items()) {
      ws.functions.emplace(name, parse_function(value, "/functions/" + name));
    }
  }
  if (root.contains("densities")) {
    const json& ds = root["densities"];
    if (!ds.is_object()) fail("/densities", "expected an object");
    for (const auto& [name, value] : ds.items()) {
      ws.densities.emplace(name, parse_density(value, "/densities/" + name));
    }
  }
  if (root.contains("passports")) {
    const json& ps = root["passports"];
    if (!ps.is_object()) fail("/passports", "expected an object");
    for (const auto& [name, value] : ps.items()) {
      ws.passports.emplace(name, parse_passport(value, "/passports/" + name));
    }
  }
  return ws;
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open workspace file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

json to_json(const Workspace& ws) {
  json root = json::object();
  if (ws.space) root["space"] = space_to_json(*ws.space);
  if (ws.space2) root["space2"] = space_to_json(*ws.space2);
  if (!ws.functions.empty()) {
    json fns = json::object();
    for (const auto& [name, f] : ws.functions) {
      json pieces = json::array();
      for (const auto& p : f.to_pieces()) {
        pieces.push_back({{"component", p.component},
                          {"from", bound_to_json(p.from)},
                          {"to", bound_to_json(p.to)},
                          {"re", p.coef.real()},
                          {"im", p.coef.imag()}});
      }
      fns[name] = std::move(pieces);
    }
    root["functions"] = std::move(fns);
  }
  if (!ws.densities.empty()) {
    json ds = json::object();
    for (const auto& [name, field] : ws.densities) {
      json pieces = json::array();
      for (std::size_t c = 0; c < field.size(); ++c) {
        for (const auto& p : field[c].pieces()) {
          pieces.push_back({{"component", c},
                            {"from", bound_to_json(p.from)},
                            {"to", bound_to_json(p.to)},
                            {"value", p.value}});
        }
      }
      ds[name] = std::move(pieces);
    }
    root["densities"] = std::move(ds);
  }
  if (!ws.passports.empty()) {
    json ps = json::object();
    for (const auto& [name, p] : ws.passports) {
      json entry = {{"s", labels_to_json(p.row_s())}};
      if (const auto* list = std::get_if<FiniteList>(&p.row_m())) {
        entry["u"] = labels_to_json(p.row_u());
        entry["m"] = list->values;
      } else {
        const auto& rule = std::get<ClosedForm>(p.row_m());
        entry["m"] = {{"kind", std::string(to_string(rule.kind()))},
                      {"params", rule.params()}};
      }
      ps[name] = std::move(entry);
    }
    root["passports"] = std::move(ps);
  }
  return root;
}

std::string emit_workspace(const Workspace& ws) {
  return to_json(ws).dump(2) + "\n";
}

}  // namespace logspace::cli
