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

#include "qunit/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qunit/errors.hpp"
#include "qunit/random.hpp"

namespace qunit {

namespace {

constexpr double kNegativeProbability = 1e-9;

const std::array<CMatrix, 4> &single_paulis() {
    static const std::array<CMatrix, 4> paulis = [] {
        const Complex i{0, 1};
        std::array<CMatrix, 4> p;
        for (auto &m : p) {
            m.resize(2, 2);
        }
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, -i, i, 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    return paulis;
}

void depolarize(CMatrix &rho, const std::vector<int> &qubits, double p) {
    if (p <= 0) {
        return;
    }
    const size_t k = qubits.size();
    const size_t n_paulis = size_t{1} << (2 * k);
    CMatrix acc = (1.0 - p) * rho;
    const double weight = p / static_cast<double>(n_paulis);
    for (size_t code = 0; code < n_paulis; ++code) {
        // local Pauli = P_{code digit 1} (x) P_{code digit 0}; digit 0 acts on qubits[0]
        CMatrix local = single_paulis()[code & 3];
        for (size_t b = 1; b < k; ++b) {
            local = qmath::kron(single_paulis()[(code >> (2 * b)) & 3], local);
        }
        CMatrix term = rho;
        conjugate_by(term, qubits, local);
        acc += weight * term;
    }
    rho = std::move(acc);
}

void amplitude_damp(CMatrix &rho, int qubit, double gamma) {
    if (gamma <= 0) {
        return;
    }
    CMatrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    CMatrix a = rho;
    conjugate_by(a, {qubit}, k0);
    CMatrix b = std::move(rho);
    conjugate_by(b, {qubit}, k1);
    rho = a + b;
}

CMatrix run_circuit(CMatrix rho, const Circuit &c, const std::optional<NoiseModel> &noise) {
    for (const auto &op : c.ops()) {
        conjugate_by(rho, op.qubits, gate_matrix(op));
        if (noise) {
            if (op.qubits.size() == 1) {
                depolarize(rho, op.qubits, noise->depolarizing_1q);
                amplitude_damp(rho, op.qubits[0], noise->amplitude_damping);
            } else {
                depolarize(rho, op.qubits, noise->depolarizing_2q);
            }
        }
    }
    return rho;
}

void require_matching(const DensityMatrix &state, const Circuit &c, const char *what) {
    if (state.n_qubits() != c.n_qubits()) {
        throw DimensionError(std::string(what) + ": " + std::to_string(state.n_qubits()) + "-qubit state with " +
                             std::to_string(c.n_qubits()) + "-qubit circuit");
    }
}

std::vector<double> diagonal_probabilities(const CMatrix &rho) {
    std::vector<double> probs(static_cast<size_t>(rho.rows()));
    double total = 0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        double p = rho(i, i).real();
        if (p < -kNegativeProbability) {
            std::ostringstream msg;
            msg << "negative outcome probability " << p << " at index " << i;
            throw NumericError(msg.str());
        }
        p = std::max(p, 0.0);
        probs[static_cast<size_t>(i)] = p;
        total += p;
    }
    for (auto &p : probs) {
        p /= total;
    }
    return probs;
}

CMatrix measured_state(const DensityMatrix &state, const std::optional<Circuit> &premeasure,
                       const std::optional<NoiseModel> &noise) {
    if (!premeasure) {
        return state.matrix();
    }
    require_matching(state, *premeasure, "premeasure");
    return run_circuit(state.matrix(), *premeasure, noise);
}

}  // namespace

void NoiseModel::validate() const {
    const std::pair<const char *, double> fields[] = {{"depolarizing_1q", depolarizing_1q},
                                                      {"depolarizing_2q", depolarizing_2q},
                                                      {"amplitude_damping", amplitude_damping},
                                                      {"readout_flip", readout_flip}};
    for (const auto &[name, value] : fields) {
        if (!(value >= 0.0 && value <= 1.0)) {
            std::ostringstream msg;
            msg << "noise parameter " << name << " = " << value << " is outside [0, 1]";
            throw NumericError(msg.str());
        }
    }
}

DensityMatrix evolve(const DensityMatrix &input, const Circuit &c, const std::optional<NoiseModel> &noise) {
    require_matching(input, c, "evolve");
    if (noise) {
        noise->validate();
    }
    CMatrix rho = run_circuit(input.matrix(), c, noise);
    return DensityMatrix((rho + rho.adjoint()) / 2.0);
}

Counts sample(const DensityMatrix &state, const std::optional<Circuit> &premeasure, uint64_t shots, uint64_t seed,
              const std::optional<NoiseModel> &noise) {
    if (shots < 1) {
        throw NumericError("sample: shots must be at least 1");
    }
    if (noise) {
        noise->validate();
    }
    const auto probs = diagonal_probabilities(measured_state(state, premeasure, noise));

    std::vector<double> cdf(probs.size());
    double running = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cdf[i] = running;
    }
    cdf.back() = 1.0;

    const int n = state.n_qubits();
    const double flip = noise ? noise->readout_flip : 0.0;
    std::vector<uint64_t> tallies(probs.size(), 0);
    Rng rng(seed);
    for (uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        auto outcome = static_cast<uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        outcome = std::min<uint64_t>(outcome, probs.size() - 1);
        if (flip > 0) {
            for (int q = 0; q < n; ++q) {
                if (rng.uniform() < flip) {
                    outcome ^= uint64_t{1} << q;
                }
            }
        }
        ++tallies[outcome];
    }

    Counts out;
    out.n_qubits = n;
    out.shots = shots;
    for (size_t i = 0; i < tallies.size(); ++i) {
        if (tallies[i] > 0) {
            out.tallies.emplace(i, tallies[i]);
        }
    }
    return out;
}

OutcomeDistribution exact_distribution(const DensityMatrix &state, const std::optional<Circuit> &premeasure) {
    return OutcomeDistribution(diagonal_probabilities(measured_state(state, premeasure, std::nullopt)));
}

OutcomeDistribution apply_readout_flip(const OutcomeDistribution &dist, double flip) {
    if (!(flip >= 0.0 && flip <= 1.0)) {
        throw NumericError("readout flip probability outside [0, 1]");
    }
    std::vector<double> p = dist.probs();
    const size_t dim = p.size();
    for (int q = 0; q < dist.n_qubits(); ++q) {
        const size_t bit = size_t{1} << q;
        for (size_t i = 0; i < dim; ++i) {
            if (i & bit) {
                continue;
            }
            const double a = p[i];
            const double b = p[i | bit];
            p[i] = (1 - flip) * a + flip * b;
            p[i | bit] = flip * a + (1 - flip) * b;
        }
    }
    return OutcomeDistribution(std::move(p));
}

Counts marginalize(const Counts &counts, const std::vector<int> &keep) {
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= counts.n_qubits || (i > 0 && keep[i] <= keep[i - 1])) {
            throw IndexError("marginalize: keep set must be sorted, distinct and in range");
        }
    }
    Counts out;
    out.n_qubits = static_cast<int>(keep.size());
    out.shots = counts.shots;
    for (const auto &[outcome, count] : counts.tallies) {
        uint64_t reduced = 0;
        for (size_t k = 0; k < keep.size(); ++k) {
            reduced |= ((outcome >> keep[k]) & 1u) << k;
        }
        out.tallies[reduced] += count;
    }
    return out;
}

}  // namespace qunit
