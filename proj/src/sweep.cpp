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

#include "qunit/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>

#include "qunit/errors.hpp"
#include "qunit/parallel.hpp"
#include "qunit/random.hpp"

namespace qunit {

void validate_sweep(const SweepConfig &config) {
    const auto check_case = [](const TestCase &tc, const char *where) {
        if (tc.assertions.size() != 1) {
            throw ValidationError(std::string(where) + ".assertions: a sweep case takes exactly one assertion");
        }
        if (expected_qubits(tc.assertions[0].expected) != tc.subject.n_qubits()) {
            throw ValidationError(std::string(where) + ".assertions[0].value: qubit count does not match circuit");
        }
    };
    check_case(config.positive_case, "positive_case");
    check_case(config.negative_case, "negative_case");
    if (config.positive_case.subject.n_qubits() != config.negative_case.subject.n_qubits()) {
        throw ValidationError("negative_case.circuit: qubit count differs from positive_case");
    }
    const auto pos = dispatch(config.positive_case.assertions[0].expected);
    const auto neg = dispatch(config.negative_case.assertions[0].expected);
    if (pos != neg) {
        throw ValidationError("negative_case.assertions[0].type: protocol '" + std::string(protocol_name(neg)) +
                              "' differs from positive case protocol '" + std::string(protocol_name(pos)) + "'");
    }
    if (config.shot_grid.empty()) {
        throw ValidationError("shot_grid: must not be empty");
    }
    for (size_t i = 0; i < config.shot_grid.size(); ++i) {
        if (config.shot_grid[i] == 0 || (i > 0 && config.shot_grid[i] <= config.shot_grid[i - 1])) {
            throw ValidationError("shot_grid[" + std::to_string(i) + "]: grid must be positive and strictly ascending");
        }
    }
    if (config.trials_per_point < 1) {
        throw ValidationError("trials_per_point: must be at least 1");
    }
    if (!(config.threshold >= 0.0 && config.threshold <= 1.0)) {
        throw ValidationError("threshold: must lie in [0, 1]");
    }
    if (config.noise) {
        try {
            config.noise->validate();
        } catch (const Error &e) {
            throw ValidationError(std::string("noise: ") + e.what());
        }
    }
}

std::vector<SweepRow> run_sweep(const SweepConfig &config, int jobs) {
    validate_sweep(config);
    const size_t points = config.shot_grid.size();
    const auto trials = static_cast<size_t>(config.trials_per_point);
    const std::array<const TestCase *, 2> cases{&config.positive_case, &config.negative_case};

    // probabilities[(point * trials + trial) * 2 + case]
    std::vector<double> probabilities(points * trials * 2);
    parallel_for(probabilities.size(), jobs, [&](size_t idx) {
        const size_t which = idx % 2;
        const size_t trial = (idx / 2) % trials;
        const size_t point = idx / (2 * trials);
        const TestCase &tc = *cases[which];
        RunConfig rc;
        rc.backend.noise = config.noise;
        rc.shots = config.shot_grid[point];
        rc.threshold = config.threshold;
        rc.seed = derive_seed(derive_seed(derive_seed(config.seed, point), trial), which);
        probabilities[idx] = run_protocol(tc.subject, tc.assertions[0].expected, rc).probability;
    });

    std::vector<SweepRow> rows;
    rows.reserve(points);
    for (size_t point = 0; point < points; ++point) {
        SweepRow row;
        row.shots = config.shot_grid[point];
        for (size_t trial = 0; trial < trials; ++trial) {
            const double pos = probabilities[(point * trials + trial) * 2];
            const double neg = probabilities[(point * trials + trial) * 2 + 1];
            row.alpha += pos;
            row.beta += neg;
            row.alpha_pass_rate += pos >= config.threshold ? 1.0 : 0.0;
            row.beta_pass_rate += neg >= config.threshold ? 1.0 : 0.0;
        }
        const auto n = static_cast<double>(trials);
        row.alpha /= n;
        row.beta /= n;
        row.alpha_pass_rate /= n;
        row.beta_pass_rate /= n;
        row.j = row.alpha - row.beta;
        rows.push_back(row);
    }
    return rows;
}

std::string format_sweep_csv(const std::vector<SweepRow> &rows, bool with_pass_rates) {
    std::string out = with_pass_rates ? "shots,alpha,beta,J,alpha_pass,beta_pass\n" : "shots,alpha,beta,J\n";
    for (const auto &r : rows) {
        out += fmt::format("{},{:.6f},{:.6f},{:.6f}", r.shots, r.alpha, r.beta, r.j);
        if (with_pass_rates) {
            out += fmt::format(",{:.6f},{:.6f}", r.alpha_pass_rate, r.beta_pass_rate);
        }
        out += '\n';
    }
    return out;
}

std::array<ProtocolCost, 3> measure_protocol_costs(const Circuit &subject, uint64_t shots, int repetitions,
                                                   const std::optional<NoiseModel> &noise) {
    if (shots == 0 || repetitions < 1) {
        throw ValidationError("timing needs at least one shot and one repetition");
    }
    const DensityMatrix ideal = evolve(DensityMatrix::zero_state(subject.n_qubits()), subject);
    const std::array<ExpectedValue, 3> expected{ExpectedValue{exact_distribution(ideal)}, ExpectedValue{ideal},
                                                ExpectedValue{ProcessRef(subject)}};
    std::array<ProtocolCost, 3> out{};
    for (size_t p = 0; p < expected.size(); ++p) {
        std::vector<double> samples;
        for (int r = 0; r < repetitions; ++r) {
            RunConfig rc;
            rc.backend.noise = noise;
            rc.shots = shots;
            rc.seed = derive_seed(0x7157, static_cast<uint64_t>(r));
            const auto start = std::chrono::steady_clock::now();
            const auto result = run_protocol(subject, expected[p], rc);
            const auto stop = std::chrono::steady_clock::now();
            (void)result;
            samples.push_back(std::chrono::duration<double>(stop - start).count());
        }
        std::nth_element(samples.begin(), samples.begin() + static_cast<long>(samples.size() / 2), samples.end());
        out[p] = {dispatch(expected[p]), samples[samples.size() / 2] / static_cast<double>(shots)};
    }
    return out;
}

}  // namespace qunit
