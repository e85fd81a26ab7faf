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

#include "logspace/error.hpp"
#include "logspace/extended_real.hpp"
#include "logspace/format.hpp"
#include "logspace/isometry.hpp"
#include "logspace/log_norm.hpp"
#include "logspace/measure_space.hpp"
#include "logspace/passport.hpp"
#include "logspace/sampling.hpp"
#include "logspace/step_function.hpp"
