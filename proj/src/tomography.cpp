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

#include "qunit/tomography.hpp"

#include <bit>
#include <stdexcept>

#include "qunit/errors.hpp"
#include "qunit/random.hpp"

namespace qunit {

namespace {

uint64_t ipow(uint64_t base, int exp) {
    uint64_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

std::vector<double> frequencies_of(const DensityMatrix &state, const Circuit &rotation, const BackendConfig &backend,
                                   uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        auto dist = exact_distribution(evolve(state, rotation, backend.noise));
        if (backend.noise && backend.noise->readout_flip > 0) {
            dist = apply_readout_flip(dist, backend.noise->readout_flip);
        }
        return dist.probs();
    }
    const Counts counts = sample(state, rotation, shots, seed, backend.noise);
    std::vector<double> f(size_t{1} << state.n_qubits(), 0.0);
    for (const auto &[outcome, count] : counts.tallies) {
        f[outcome] = static_cast<double>(count) / static_cast<double>(shots);
    }
    return f;
}

// Unprojected estimate of the state produced by prep then subject.
CMatrix raw_state_estimate(const Circuit &prep, const Circuit &subject, const BackendConfig &backend, uint64_t shots,
                           uint64_t seed) {
    const int n = subject.n_qubits();
    const DensityMatrix prepared = evolve(DensityMatrix::zero_state(n), prep.then(subject), backend.noise);
    const auto settings = measurement_settings(n);
    std::vector<std::vector<double>> freqs;
    freqs.reserve(settings.size());
    for (size_t s = 0; s < settings.size(); ++s) {
        freqs.push_back(frequencies_of(prepared, settings[s].rotation, backend, shots, derive_seed(seed, s)));
    }
    return linear_inversion(freqs, n);
}

}  // namespace

std::vector<MeasurementSetting> measurement_settings(int n_qubits) {
    const uint64_t count = ipow(3, n_qubits);
    std::vector<MeasurementSetting> out;
    out.reserve(count);
    for (uint64_t idx = 0; idx < count; ++idx) {
        MeasurementSetting setting{{}, Circuit(n_qubits)};
        uint64_t rest = idx;
        for (int q = 0; q < n_qubits; ++q) {
            const auto basis = static_cast<PauliBasis>(rest % 3);
            rest /= 3;
            setting.basis.push_back(basis);
            if (basis == PauliBasis::X) {
                setting.rotation.h(q);
            } else if (basis == PauliBasis::Y) {
                setting.rotation.sdg(q).h(q);
            }
        }
        out.push_back(std::move(setting));
    }
    return out;
}

std::vector<PreparationSetting> preparation_settings(int n_qubits) {
    const uint64_t count = ipow(4, n_qubits);
    std::vector<PreparationSetting> out;
    out.reserve(count);
    for (uint64_t idx = 0; idx < count; ++idx) {
        PreparationSetting setting{{}, Circuit(n_qubits)};
        uint64_t rest = idx;
        for (int q = 0; q < n_qubits; ++q) {
            const auto label = static_cast<PrepState>(rest % 4);
            rest /= 4;
            setting.label.push_back(label);
            switch (label) {
                case PrepState::Zero:
                    break;
                case PrepState::One:
                    setting.prep.x(q);
                    break;
                case PrepState::Plus:
                    setting.prep.h(q);
                    break;
                case PrepState::PlusI:
                    setting.prep.h(q).s(q);
                    break;
            }
        }
        out.push_back(std::move(setting));
    }
    return out;
}

CMatrix pauli_string(const std::vector<int> &codes) {
    const size_t n = codes.size();
    const Eigen::Index dim = Eigen::Index{1} << n;
    uint64_t flip = 0;
    for (size_t q = 0; q < n; ++q) {
        if (codes[q] < 0 || codes[q] > 3) {
            throw IndexError("pauli_string: code must be in 0..3");
        }
        if (codes[q] == 1 || codes[q] == 2) {
            flip |= uint64_t{1} << q;
        }
    }
    CMatrix m = CMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Complex phase = 1;
        for (size_t q = 0; q < n; ++q) {
            const bool bit = (static_cast<uint64_t>(col) >> q) & 1u;
            if (codes[q] == 2) {
                phase *= bit ? Complex(0, -1) : Complex(0, 1);
            } else if (codes[q] == 3 && bit) {
                phase = -phase;
            }
        }
        m(static_cast<Eigen::Index>(static_cast<uint64_t>(col) ^ flip), col) = phase;
    }
    return m;
}

CMatrix linear_inversion(const std::vector<std::vector<double>> &frequencies, int n_qubits) {
    const uint64_t n_settings = ipow(3, n_qubits);
    const size_t dim = size_t{1} << n_qubits;
    if (frequencies.size() != n_settings) {
        throw DimensionError("linear_inversion: expected " + std::to_string(n_settings) + " settings, got " +
                             std::to_string(frequencies.size()));
    }
    for (const auto &f : frequencies) {
        if (f.size() != dim) {
            throw DimensionError("linear_inversion: frequency vector has wrong length");
        }
    }
    const auto settings = measurement_settings(n_qubits);

    CMatrix rho = CMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const uint64_t n_paulis = ipow(4, n_qubits);
    std::vector<int> codes(static_cast<size_t>(n_qubits));
    for (uint64_t p = 1; p < n_paulis; ++p) {
        uint64_t support = 0;
        uint64_t rest = p;
        for (int q = 0; q < n_qubits; ++q) {
            codes[static_cast<size_t>(q)] = static_cast<int>(rest % 4);
            rest /= 4;
            if (codes[static_cast<size_t>(q)] != 0) {
                support |= uint64_t{1} << q;
            }
        }
        // Average the parity over every setting that measures P's support in
        // the right bases; the other qubits are marginalized.
        double sum = 0;
        int used = 0;
        for (uint64_t s = 0; s < n_settings; ++s) {
            bool compatible = true;
            for (int q = 0; q < n_qubits && compatible; ++q) {
                const int c = codes[static_cast<size_t>(q)];
                compatible = c == 0 || static_cast<int>(settings[s].basis[static_cast<size_t>(q)]) == c - 1;
            }
            if (!compatible) {
                continue;
            }
            double e = 0;
            for (size_t o = 0; o < dim; ++o) {
                e += (std::popcount(o & support) & 1) ? -frequencies[s][o] : frequencies[s][o];
            }
            sum += e;
            ++used;
        }
        const double expectation = sum / used;
        if (expectation != 0) {
            rho += expectation * pauli_string(codes);
        }
    }
    return rho / static_cast<double>(dim);
}

const std::vector<CMatrix> &preparation_dual_frame() {
    static const std::vector<CMatrix> dual = [] {
        const Complex i{0, 1};
        const double r = 0.5;
        std::vector<CMatrix> states(4, CMatrix(2, 2));
        states[0] << 1, 0, 0, 0;
        states[1] << 0, 0, 0, 1;
        states[2] << r, r, r, r;
        states[3] << r, -i * r, i * r, r;

        // Column k of the frame map is rho_k flattened row-major.
        Eigen::Matrix4cd frame;
        for (int k = 0; k < 4; ++k) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    frame(a * 2 + b, k) = states[static_cast<size_t>(k)](a, b);
                }
            }
        }
        Eigen::FullPivLU<Eigen::Matrix4cd> lu(frame);
        if (!lu.isInvertible()) {
            throw std::logic_error("preparation frame is singular");
        }
        const Eigen::Matrix4cd inv = lu.inverse();
        std::vector<CMatrix> out(4, CMatrix(2, 2));
        for (int k = 0; k < 4; ++k) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    out[static_cast<size_t>(k)](a, b) = inv(k, a * 2 + b);
                }
            }
        }
        return out;
    }();
    return dual;
}

DensityMatrix state_tomography(const Circuit &prep, const Circuit &subject, const BackendConfig &backend,
                               uint64_t shots_per_setting, uint64_t seed) {
    const int n = subject.n_qubits();
    if (n > kMaxStateTomographyQubits) {
        throw SizeLimitError("state tomography is limited to " + std::to_string(kMaxStateTomographyQubits) +
                             " qubits, got " + std::to_string(n));
    }
    const CMatrix raw = raw_state_estimate(prep, subject, backend, shots_per_setting, seed);
    return DensityMatrix(qmath::psd_project(raw, 1.0));
}

ChoiMatrix process_tomography(const Circuit &subject, const BackendConfig &backend, uint64_t shots_per_setting,
                              uint64_t seed) {
    const int n = subject.n_qubits();
    if (n > kMaxProcessTomographyQubits) {
        throw SizeLimitError("process tomography is limited to " + std::to_string(kMaxProcessTomographyQubits) +
                             " qubits, got " + std::to_string(n));
    }
    const auto &dual = preparation_dual_frame();
    const auto preps = preparation_settings(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix choi = CMatrix::Zero(dim * dim, dim * dim);
    for (size_t k = 0; k < preps.size(); ++k) {
        const CMatrix output = raw_state_estimate(preps[k].prep, subject, backend, shots_per_setting, derive_seed(seed, k));
        CMatrix weight = dual[static_cast<size_t>(preps[k].label[0])];
        for (int q = 1; q < n; ++q) {
            weight = qmath::kron(dual[static_cast<size_t>(preps[k].label[static_cast<size_t>(q)])], weight);
        }
        choi += qmath::kron(weight, output);
    }
    return ChoiMatrix(qmath::psd_project(choi, static_cast<double>(dim)));
}

}  // namespace qunit
