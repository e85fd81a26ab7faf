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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "logspace/measure_space.hpp"
#include "logspace/passport.hpp"
#include "logspace/step_function.hpp"

namespace logspace::cli {

/// In-memory form of a workspace file.
///
///   {
///     "space":  [ {"weight": 0, "carrier": [0, "inf"],
///                  "density": [{"from": 0, "to": "inf", "value": 1}]} ],
///     "space2": [ ... ],
///     "functions": { "f": [{"component": 0, "from": 0, "to": 1,
///                           "re": 3, "im": 0}] },
///     "densities": { "h": [{"component": 0, "from": 0, "to": 1,
///                           "value": 2}] },
///     "passports": { "p": {"s": [0], "u": [1], "m": [3]},
///                    "q": {"s": [], "m": {"kind": "LINEAR",
///                                         "params": [1, 0]}} }
///   }
///
/// "inf" marks an unbounded right end. "component" defaults to 0 and "im"
/// to 0. With a rule for "m", "u" is omitted (or empty) and stands for the
/// labels 0 1 2 ...
struct Workspace {
  std::optional<MeasureSpace> space;
  std::optional<MeasureSpace> space2;
  std::map<std::string, StepFunction> functions;
  std::map<std::string, DensityField> densities;
  std::map<std::string, Passport> passports;

  friend bool operator==(const Workspace&, const Workspace&) = default;
};

/// Throws logspace::Error naming the offending line/column (syntax errors)
/// or JSON-pointer path (schema errors). Nothing is accepted partially.
Workspace parse_workspace(std::string_view text);
Workspace load_workspace(const std::filesystem::path& path);

nlohmann::json to_json(const Workspace& workspace);
/// Pretty-printed JSON that parse_workspace reads back to an equal value.
std::string emit_workspace(const Workspace& workspace);

}  // namespace logspace::cli
