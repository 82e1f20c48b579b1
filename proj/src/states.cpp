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

#include "qunit/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qunit/errors.hpp"

namespace qunit {

namespace {

constexpr double kTraceTol = 1e-9;
constexpr double kFidelityOvershoot = 1e-6;

void require_square_power_of_two(const CMatrix &m, const char *what, int &n_qubits) {
    if (m.rows() != m.cols()) {
        throw DimensionError(std::string(what) + ": matrix must be square");
    }
    n_qubits = qubits_for_dimension(m.rows());
    if (n_qubits < 1) {
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(m.rows()) +
                             " is not a power of two >= 2");
    }
}

void require_physical(const CMatrix &m, double expected_trace, const char *what) {
    auto dev = qmath::hermitian_deviation(m);
    if (dev > qmath::Tolerance::hermitian) {
        std::ostringstream msg;
        msg << what << ": matrix is not Hermitian (max deviation " << dev << ")";
        throw DimensionError(msg.str());
    }
    const double tr = m.trace().real();
    if (std::abs(tr - expected_trace) > kTraceTol * expected_trace) {
        std::ostringstream msg;
        msg << what << ": trace " << tr << " differs from " << expected_trace;
        throw NumericError(msg.str());
    }
    auto eig = qmath::hermitian_eig(m);
    if (eig.values[0] < -qmath::Tolerance::negative_eigenvalue) {
        std::ostringstream msg;
        msg << what << ": matrix is not PSD (eigenvalue " << eig.values[0] << ")";
        throw NotPsdError(msg.str(), eig.values[0]);
    }
}

}  // namespace

int qubits_for_dimension(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        return -1;
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

DensityMatrix::DensityMatrix(CMatrix mat) : n_qubits_(0), mat_(std::move(mat)) {
    require_square_power_of_two(mat_, "DensityMatrix", n_qubits_);
    require_physical(mat_, 1.0, "DensityMatrix");
}

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    CMatrix m = CMatrix::Zero(dim, dim);
    m(0, 0) = 1;
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const CVector &psi) {
    const double norm = psi.norm();
    if (!(norm > 0)) {
        throw DegenerateInputError("DensityMatrix::from_pure: zero vector");
    }
    CVector v = psi / norm;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
    return (mat_ * mat_).trace().real();
}

ChoiMatrix::ChoiMatrix(CMatrix mat) : n_qubits_(0), mat_(std::move(mat)) {
    int total = 0;
    require_square_power_of_two(mat_, "ChoiMatrix", total);
    if (total % 2 != 0) {
        throw DimensionError("ChoiMatrix: dimension " + std::to_string(mat_.rows()) + " is not 4^n");
    }
    n_qubits_ = total / 2;
    require_physical(mat_, static_cast<double>(Eigen::Index{1} << n_qubits_), "ChoiMatrix");
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs) : n_qubits_(0), probs_(std::move(probs)) {
    n_qubits_ = qubits_for_dimension(static_cast<Eigen::Index>(probs_.size()));
    if (n_qubits_ < 1) {
        throw DimensionError("OutcomeDistribution: length " + std::to_string(probs_.size()) +
                             " is not a power of two >= 2");
    }
    for (size_t i = 0; i < probs_.size(); ++i) {
        if (!(probs_[i] >= 0) || !std::isfinite(probs_[i])) {
            throw NumericError("OutcomeDistribution: probability at index " + std::to_string(i) +
                               " is negative or not finite");
        }
    }
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > kTraceTol) {
        std::ostringstream msg;
        msg << "OutcomeDistribution: probabilities sum to " << total;
        throw NumericError(msg.str());
    }
}

ChoiMatrix circuit_to_choi(const Circuit &c) {
    const CMatrix u = circuit_to_unitary(c);
    // Column-major vec of U: component (i*d + a) is U(a, i), which is the
    // vector sum_i |i> (x) U|i>.
    const Eigen::Map<const CVector> vec(u.data(), u.size());
    return ChoiMatrix(vec * vec.adjoint());
}

double state_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.n_qubits() != sigma.n_qubits()) {
        throw DimensionError("state_fidelity: " + std::to_string(rho.n_qubits()) + "-qubit state vs " +
                             std::to_string(sigma.n_qubits()) + "-qubit state");
    }
    const CMatrix sqrt_rho = qmath::matrix_sqrt_psd(rho.matrix());
    const CMatrix sqrt_sigma = qmath::matrix_sqrt_psd(sigma.matrix());
    const double root = qmath::nuclear_norm(sqrt_rho * sqrt_sigma);
    const double f = root * root;
    if (!std::isfinite(f) || f > 1.0 + kFidelityOvershoot) {
        std::ostringstream msg;
        msg << "state_fidelity: value " << f << " outside [0, 1]";
        throw NumericError(msg.str());
    }
    return std::clamp(f, 0.0, 1.0);
}

double process_fidelity(const ChoiMatrix &a, const ChoiMatrix &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("process_fidelity: " + std::to_string(a.n_qubits()) + "-qubit channel vs " +
                             std::to_string(b.n_qubits()) + "-qubit channel");
    }
    const double scale = static_cast<double>(Eigen::Index{1} << a.n_qubits());
    return state_fidelity(DensityMatrix(a.matrix() / scale), DensityMatrix(b.matrix() / scale));
}

}  // namespace qunit
