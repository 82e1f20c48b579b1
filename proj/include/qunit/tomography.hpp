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

// State and process tomography by linear inversion.
//
// State tomography measures every product Pauli basis (3^n settings), turns
// the outcome frequencies into Pauli expectations and inverts
// rho = 2^-n sum_P <P> P. Process tomography prepares every product of
// {|0>, |1>, |+>, |+i>} (4^n settings), reconstructs each output, and
// assembles the Choi matrix through the dual of the preparation frame.
// Both estimates are projected back onto physical matrices.
//
// `shots_per_setting == 0` selects analytic mode: exact outcome
// probabilities replace sampled frequencies.

#pragma once

#include <cstdint>
#include <vector>

#include "qunit/simulator.hpp"

namespace qunit {

enum class PauliBasis : uint8_t { X, Y, Z };
enum class PrepState : uint8_t { Zero, One, Plus, PlusI };

constexpr int kMaxStateTomographyQubits = 4;
constexpr int kMaxProcessTomographyQubits = 3;

struct MeasurementSetting {
    std::vector<PauliBasis> basis;  // per qubit
    Circuit rotation;               // maps the basis onto the computational one
};

struct PreparationSetting {
    std::vector<PrepState> label;  // per qubit
    Circuit prep;                  // builds the product state from |0...0>
};

/// All 3^n settings; setting index = sum_q basis[q] * 3^q.
std::vector<MeasurementSetting> measurement_settings(int n_qubits);
/// All 4^n preparations; index = sum_q label[q] * 4^q.
std::vector<PreparationSetting> preparation_settings(int n_qubits);

/// Hermitian Pauli string matrix; codes[q] in {0: I, 1: X, 2: Y, 3: Z} acts
/// on qubit q.
CMatrix pauli_string(const std::vector<int> &codes);

/// Linear-inversion estimate (not projected) from per-setting outcome
/// frequencies ordered as measurement_settings(n).
CMatrix linear_inversion(const std::vector<std::vector<double>> &frequencies, int n_qubits);

/// Single-qubit dual frame: dual[k] is the operator W_k with
/// sum_k W_k (x) rho_k = sum_ij |i><j| (x) |i><j| for the four preparations.
const std::vector<CMatrix> &preparation_dual_frame();

DensityMatrix state_tomography(const Circuit &prep, const Circuit &subject, const BackendConfig &backend,
                               uint64_t shots_per_setting, uint64_t seed);

ChoiMatrix process_tomography(const Circuit &subject, const BackendConfig &backend, uint64_t shots_per_setting,
                              uint64_t seed);

}  // namespace qunit
