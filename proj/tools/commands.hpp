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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "qunit/orchestrator.hpp"

namespace qunit::cli {

enum ExitCode : int {
    kAllPassed = 0,
    kSomeFailed = 1,
    kInvalidInput = 2,
    kNumericFailure = 3,
};

struct RunOptions {
    std::filesystem::path suite_path{};
    std::optional<uint64_t> shots{};
    std::optional<uint64_t> seed{};
    std::optional<double> threshold{};
    std::optional<std::string> noise{};  // preset name or file
    std::optional<std::filesystem::path> save_data{};
    ReportFormat format = ReportFormat::Text;
    int jobs = 1;
};

struct SweepOptions {
    std::filesystem::path sweep_path{};
    std::optional<uint64_t> seed{};
    std::optional<std::string> noise{};
    std::optional<int> trials{};
    bool pass_rate = false;
    bool timing = false;
    int jobs = 1;
};

/// Report goes to `out`, diagnostics to `err`. Returns an ExitCode.
int cmd_run(const RunOptions &options, std::ostream &out, std::ostream &err);
int cmd_sweep(const SweepOptions &options, std::ostream &out, std::ostream &err);

}  // namespace qunit::cli
