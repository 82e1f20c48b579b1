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

// Density-matrix backend with gate-attached parametric noise.

#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qunit/states.hpp"

namespace qunit {

/// After every gate: depolarizing on the gate's qubits (1q or 2q rate), then
/// amplitude damping on the target of single-qubit gates. At measurement,
/// each qubit's bit flips independently with probability readout_flip.
struct NoiseModel {
    double depolarizing_1q = 0;
    double depolarizing_2q = 0;
    double amplitude_damping = 0;
    double readout_flip = 0;

    /// Representative of a superconducting device of the 27-qubit era.
    static NoiseModel default_preset() {
        return {0.001, 0.01, 0.001, 0.02};
    }

    /// Throws NumericError unless every parameter lies in [0, 1].
    void validate() const;

    bool operator==(const NoiseModel &) const = default;
};

/// What the protocols execute on. Only the embedded simulator exists; remote
/// backends would plug in here.
struct BackendConfig {
    std::optional<NoiseModel> noise;

    bool operator==(const BackendConfig &) const = default;
};

struct Counts {
    int n_qubits = 0;
    std::map<uint64_t, uint64_t> tallies;  // outcome index -> count, zero bins omitted
    uint64_t shots = 0;

    uint64_t operator[](uint64_t outcome) const {
        auto it = tallies.find(outcome);
        return it == tallies.end() ? 0 : it->second;
    }

    bool operator==(const Counts &) const = default;
};

DensityMatrix evolve(const DensityMatrix &input, const Circuit &c, const std::optional<NoiseModel> &noise = {});

/// Terminal full-register measurement after an optional pre-measurement
/// rotation. Each call owns a generator seeded from `seed`.
Counts sample(const DensityMatrix &state, const std::optional<Circuit> &premeasure, uint64_t shots, uint64_t seed,
              const std::optional<NoiseModel> &noise = {});

/// Diagonal of the (rotated) state, clamped and renormalized.
OutcomeDistribution exact_distribution(const DensityMatrix &state, const std::optional<Circuit> &premeasure = {});

/// Distribution after independent per-qubit readout bit flips.
OutcomeDistribution apply_readout_flip(const OutcomeDistribution &dist, double flip);

/// Keep only the listed qubits (sorted, distinct), renumbered from 0.
Counts marginalize(const Counts &counts, const std::vector<int> &keep);

}  // namespace qunit
