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

// Independent reference computations and random fixtures shared by the
// unit tests and the acceptance runner. Nothing here calls into the code
// paths it is used to check.

#pragma once

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <random>

#include "qunit/circuit.hpp"
#include "qunit/states.hpp"

namespace qunit::testing {

inline const Complex kI{0.0, 1.0};

inline CVector random_pure(int n_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CVector psi(Eigen::Index{1} << n_qubits);
    for (auto &a : psi) {
        a = Complex(g(rng), g(rng));
    }
    return psi / psi.norm();
}

/// Ginibre-distributed mixed state of the given rank.
inline CMatrix random_density(int n_qubits, int rank, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    CMatrix a(d, rank);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        a.data()[i] = Complex(g(rng), g(rng));
    }
    CMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline Circuit random_circuit(int n_qubits, int depth, std::mt19937_64 &rng) {
    static const char *one[] = {"x", "y", "z", "h", "s", "sdg", "t", "tdg", "rx", "ry", "rz"};
    static const char *two[] = {"cx", "cz", "swap"};
    std::uniform_int_distribution<int> qubit(0, n_qubits - 1);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    Circuit c(n_qubits);
    for (int k = 0; k < depth; ++k) {
        const bool pair = n_qubits > 1 && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
        if (pair) {
            const int a = qubit(rng);
            int b = qubit(rng);
            while (b == a) {
                b = qubit(rng);
            }
            c.append(two[std::uniform_int_distribution<int>(0, 2)(rng)], {a, b});
        } else {
            const std::string name = one[std::uniform_int_distribution<int>(0, 10)(rng)];
            const bool rot = name[0] == 'r';
            c.append(name, {qubit(rng)}, rot ? std::optional<double>(angle(rng)) : std::nullopt);
        }
    }
    return c;
}

/// Textbook matrix of a gate, written out independently of the library.
inline CMatrix reference_gate(const GateOp &op) {
    const double r = 1 / std::sqrt(2.0);
    const double th = op.angle.value_or(0.0);
    CMatrix m;
    switch (op.kind) {
        case GateKind::X: m.resize(2, 2); m << 0, 1, 1, 0; break;
        case GateKind::Y: m.resize(2, 2); m << 0, -kI, kI, 0; break;
        case GateKind::Z: m.resize(2, 2); m << 1, 0, 0, -1; break;
        case GateKind::H: m.resize(2, 2); m << r, r, r, -r; break;
        case GateKind::S: m.resize(2, 2); m << 1, 0, 0, kI; break;
        case GateKind::Sdg: m.resize(2, 2); m << 1, 0, 0, -kI; break;
        case GateKind::T: m.resize(2, 2); m << 1, 0, 0, std::exp(kI * M_PI / 4.0); break;
        case GateKind::Tdg: m.resize(2, 2); m << 1, 0, 0, std::exp(-kI * M_PI / 4.0); break;
        case GateKind::RX:
            m.resize(2, 2);
            m << std::cos(th / 2), -kI * std::sin(th / 2), -kI * std::sin(th / 2), std::cos(th / 2);
            break;
        case GateKind::RY:
            m.resize(2, 2);
            m << std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2), std::cos(th / 2);
            break;
        case GateKind::RZ: m.resize(2, 2); m << std::exp(-kI * th / 2.0), 0, 0, std::exp(kI * th / 2.0); break;
        default: break;
    }
    return m;
}

inline CMatrix reference_kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            for (Eigen::Index k = 0; k < b.rows(); ++k) {
                for (Eigen::Index l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Full-register unitary built gate by gate: single-qubit gates by explicit
/// Kronecker products, two-qubit gates by their action on basis states.
inline CMatrix reference_unitary(const Circuit &c) {
    const int n = c.n_qubits();
    const Eigen::Index d = Eigen::Index{1} << n;
    CMatrix u = CMatrix::Identity(d, d);
    for (const auto &op : c.ops()) {
        CMatrix full = CMatrix::Zero(d, d);
        if (op.qubits.size() == 1) {
            const int q = op.qubits[0];
            const CMatrix hi = CMatrix::Identity(Eigen::Index{1} << (n - 1 - q), Eigen::Index{1} << (n - 1 - q));
            const CMatrix lo = CMatrix::Identity(Eigen::Index{1} << q, Eigen::Index{1} << q);
            full = reference_kron(reference_kron(hi, reference_gate(op)), lo);
        } else {
            const int a = op.qubits[0];
            const int b = op.qubits[1];
            for (Eigen::Index col = 0; col < d; ++col) {
                const int ba = static_cast<int>((col >> a) & 1);
                const int bb = static_cast<int>((col >> b) & 1);
                Eigen::Index row = col;
                Complex amp = 1;
                switch (op.kind) {
                    case GateKind::CX: row = ba ? (col ^ (Eigen::Index{1} << b)) : col; break;
                    case GateKind::CZ: amp = (ba && bb) ? -1.0 : 1.0; break;
                    case GateKind::Swap:
                        if (ba != bb) {
                            row = col ^ (Eigen::Index{1} << a) ^ (Eigen::Index{1} << b);
                        }
                        break;
                    default: break;
                }
                full(row, col) = amp;
            }
        }
        u = full * u;
    }
    return u;
}

/// Unnormalized Choi matrix straight from its definition, sum |i><j| (x) U|i><j|U^dag.
inline CMatrix reference_choi(const CMatrix &u) {
    const Eigen::Index d = u.rows();
    CMatrix c = CMatrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            c.block(i * d, j * d, d, d) = u.col(i) * u.col(j).adjoint();
        }
    }
    return c;
}

/// Hermitian square root via Eigen's own solver.
inline CMatrix reference_sqrt(const CMatrix &a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

/// The fidelity formula taken literally: (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
inline double reference_uhlmann(const CMatrix &rho, const CMatrix &sigma) {
    const CMatrix s = reference_sqrt(rho);
    CMatrix inner = s * sigma * s;
    inner = (inner + inner.adjoint()) / 2.0;
    const double t = reference_sqrt(inner).trace().real();
    return t * t;
}

/// Q(s, x) as the tail integral of the Gamma(s) density, by double-exponential quadrature.
inline double reference_gamma_q(double s, double x) {
    const double log_norm = std::lgamma(s);
    auto density = [&](double t) { return t <= 0 ? 0.0 : std::exp((s - 1) * std::log(t) - t - log_norm); };
    if (x == 0) {
        return 1.0;
    }
    // Split at the mode region so the semi-infinite part starts where the tail is smooth.
    const double split = std::max(x, s + 10 * std::sqrt(s) + 10);
    double total = 0;
    if (split > x) {
        boost::math::quadrature::tanh_sinh<double> ts;
        total += ts.integrate(density, x, split);
    }
    boost::math::quadrature::exp_sinh<double> es;
    total += es.integrate([&](double u) { return density(split + u); }, 0.0, std::numeric_limits<double>::infinity());
    return total;
}

}  // namespace qunit::testing
