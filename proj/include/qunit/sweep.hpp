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

// Accuracy sweep: a known-correct and a mutated subroutine are asserted
// against the same kind of expected value over a grid of shot counts.
// alpha / beta are the mean probabilities of passing for the correct /
// mutated case, and Youden's J = alpha - beta.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qunit/orchestrator.hpp"

namespace qunit {

struct SweepConfig {
    std::string name;
    TestCase positive_case;  // exactly one assertion each
    TestCase negative_case;
    std::vector<uint64_t> shot_grid{10, 30, 100, 300, 1000, 3000, 10000};
    int trials_per_point = 20;
    std::optional<NoiseModel> noise{};
    uint64_t seed = 0;
    double threshold = 0.5;  // used for the pass-rate columns
};

/// Throws ValidationError, e.g. when the two cases use different assertion types.
void validate_sweep(const SweepConfig &config);

struct SweepRow {
    uint64_t shots = 0;
    double alpha = 0;
    double beta = 0;
    double j = 0;
    double alpha_pass_rate = 0;  // fraction of trials with probability >= threshold
    double beta_pass_rate = 0;

    bool operator==(const SweepRow &) const = default;
};

/// Seeds derive from (seed, grid index, trial, case), so the rows do not
/// depend on `jobs`.
std::vector<SweepRow> run_sweep(const SweepConfig &config, int jobs = 1);

/// Header `shots,alpha,beta,J`, plus `alpha_pass,beta_pass` when requested.
std::string format_sweep_csv(const std::vector<SweepRow> &rows, bool with_pass_rates = false);

struct ProtocolCost {
    ProtocolId protocol;
    double seconds_per_shot;  // wall time divided by the configured shot count
};

/// Times each protocol on `subject`, asserting against its own ideal output
/// so every protocol does its full workflow. Median of `repetitions` runs.
std::array<ProtocolCost, 3> measure_protocol_costs(const Circuit &subject, uint64_t shots, int repetitions,
                                                   const std::optional<NoiseModel> &noise = {});

}  // namespace qunit
