// Copyright 2026 The qunit Authors
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

// Suite and sweep documents.
//
// Suite:
//   {"name": "...", "n_qubits": 2, "save_data": false,
//    "defaults": {"shots": 3000, "seed": 0, "threshold": 0.5, "noise": null},
//    "cases": [{"name": "...", "circuit": [{"gate": "h", "qubits": [0]}],
//               "assertions": [{"type": "distribution", "value": [...],
//                               "shots": 100, "threshold": 0.9}]}]}
//
// Sweep:
//   {"name": "...", "n_qubits": 2, "positive_case": <case>, "negative_case": <case>,
//    "shot_grid": [...], "trials_per_point": 20, "seed": 0, "threshold": 0.5,
//    "noise": null}
//
// "noise" is null, "none", "default", or an object of channel parameters.

#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "qunit/orchestrator.hpp"
#include "qunit/sweep.hpp"

namespace qunit {

TestSuite parse_suite(std::string_view text);
TestSuite load_suite(const std::filesystem::path &path);

SweepConfig parse_sweep(std::string_view text);
SweepConfig load_sweep(const std::filesystem::path &path);

/// "none" gives no noise, "default" the default preset; anything else is
/// read as a JSON file holding a noise object.
std::optional<NoiseModel> resolve_noise(std::string_view spec);

}  // namespace qunit
