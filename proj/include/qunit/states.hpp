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

#include <vector>

#include "qunit/circuit.hpp"

namespace qunit {

/// Number of qubits n such that dim == 2^n, or -1.
int qubits_for_dimension(Eigen::Index dim);

/// Hermitian, unit-trace, PSD matrix on n qubits. Validated on construction
/// and immutable afterwards.
class DensityMatrix {
   public:
    explicit DensityMatrix(CMatrix mat);

    static DensityMatrix zero_state(int n_qubits);
    /// |psi><psi| for a (not necessarily normalized) state vector.
    static DensityMatrix from_pure(const CVector &psi);
    static DensityMatrix maximally_mixed(int n_qubits);

    int n_qubits() const {
        return n_qubits_;
    }
    const CMatrix &matrix() const {
        return mat_;
    }
    double purity() const;

    bool operator==(const DensityMatrix &other) const {
        return mat_ == other.mat_;
    }

   private:
    int n_qubits_;
    CMatrix mat_;
};

/// Unnormalized Choi matrix C = sum_ij |i><j| (x) Phi(|i><j|), input factor
/// most significant. Trace 2^n for trace-preserving channels.
class ChoiMatrix {
   public:
    explicit ChoiMatrix(CMatrix mat);

    int n_qubits() const {
        return n_qubits_;
    }
    const CMatrix &matrix() const {
        return mat_;
    }

    bool operator==(const ChoiMatrix &other) const {
        return mat_ == other.mat_;
    }

   private:
    int n_qubits_;
    CMatrix mat_;
};

/// Probabilities over 2^n outcomes, indexed little-endian.
class OutcomeDistribution {
   public:
    explicit OutcomeDistribution(std::vector<double> probs);

    int n_qubits() const {
        return n_qubits_;
    }
    const std::vector<double> &probs() const {
        return probs_;
    }
    double operator[](size_t i) const {
        return probs_[i];
    }
    size_t size() const {
        return probs_.size();
    }

    bool operator==(const OutcomeDistribution &) const = default;

   private:
    int n_qubits_;
    std::vector<double> probs_;
};

ChoiMatrix circuit_to_choi(const Circuit &c);

/// Uhlmann-Jozsa fidelity [tr sqrt(sqrt(rho) sigma sqrt(rho))]^2.
///
/// Evaluated as the squared trace norm of sqrt(rho) sqrt(sigma), which is the
/// same quantity but keeps full precision when either state is close to pure.
double state_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// state_fidelity of the two Choi matrices normalized by 2^n.
double process_fidelity(const ChoiMatrix &a, const ChoiMatrix &b);

}  // namespace qunit
