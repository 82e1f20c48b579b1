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

// Dense complex linear algebra used by the quantum layer: Hermitian
// eigendecomposition (cyclic Jacobi), PSD square root, trace norm, Kronecker
// product, partial trace over qubit subsystems and projection onto the PSD
// cone with fixed trace.
//
// Everything here is templated on the real scalar type and accepts any Eigen
// expression, so `qmath::trace_norm(rho - sigma)` works without a temporary.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qunit/errors.hpp"

namespace qunit::qmath {

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
struct EigenDecomposition {
    RealVector<Real> values;        // ascending
    ComplexMatrix<Real> vectors;    // column k belongs to values[k]
};

/// Tolerances shared by the kernel. Exposed so callers validating their own
/// types agree with the kernel on what "Hermitian" and "PSD" mean.
struct Tolerance {
    static constexpr double hermitian = 1e-9;
    static constexpr double negative_eigenvalue = 1e-8;
    static constexpr double jacobi_off_diagonal = 1e-14;
    static constexpr int jacobi_max_sweeps = 100;
};

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived> &a) {
    if (a.size() == 0) {
        return 0;
    }
    return a.cwiseAbs().maxCoeff();
}

template <typename Derived>
typename Derived::RealScalar hermitian_deviation(const Eigen::MatrixBase<Derived> &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("expected a square matrix, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    }
    return max_abs(a - a.adjoint());
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived> &a, double tol = Tolerance::hermitian) {
    return a.rows() == a.cols() && hermitian_deviation(a) <= tol;
}

namespace detail {

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived> &a, const char *op) {
    auto dev = hermitian_deviation(a);
    if (dev > Tolerance::hermitian) {
        std::ostringstream msg;
        msg << op << ": matrix is not Hermitian (max |a - a^H| = " << dev << ")";
        throw DimensionError(msg.str());
    }
}

/// V * diag(f(values)) * V^H, symmetrized.
template <typename Real, typename F>
ComplexMatrix<Real> spectral_map(const EigenDecomposition<Real> &eig, F &&f) {
    RealVector<Real> mapped = eig.values.unaryExpr(f);
    ComplexMatrix<Real> out =
        eig.vectors * mapped.template cast<std::complex<Real>>().asDiagonal() * eig.vectors.adjoint();
    return (out + out.adjoint()) / Real(2);
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is symmetrized as (a + a^H)/2 first. Sweeps stop once the
/// off-diagonal Frobenius norm drops below 1e-14 relative to the Frobenius
/// norm of the input; after 100 sweeps a NumericError reports the residual.
template <typename Derived>
EigenDecomposition<typename Derived::RealScalar> hermitian_eig(const Eigen::MatrixBase<Derived> &a) {
    using Real = typename Derived::RealScalar;
    using Complex = std::complex<Real>;
    detail::require_hermitian(a, "hermitian_eig");

    const Eigen::Index n = a.rows();
    ComplexMatrix<Real> m = (a + a.adjoint()) / Real(2);
    ComplexMatrix<Real> v = ComplexMatrix<Real>::Identity(n, n);

    auto off_norm = [&] {
        Real s = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index i = 0; i < n; ++i) {
                if (i != j) {
                    s += std::norm(m(i, j));
                }
            }
        }
        return std::sqrt(s);
    };

    const Real threshold = Real(Tolerance::jacobi_off_diagonal) * m.norm();
    int sweep = 0;
    for (;; ++sweep) {
        Real off = off_norm();
        if (off <= threshold) {
            break;
        }
        if (sweep == Tolerance::jacobi_max_sweeps) {
            std::ostringstream msg;
            msg << "hermitian_eig: no convergence after " << sweep << " sweeps (off-diagonal residual " << off
                << ")";
            throw NumericError(msg.str());
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Complex apq = m(p, q);
                const Real r = std::abs(apq);
                if (r == Real(0)) {
                    continue;
                }
                // Phase-rotate q so the (p, q) entry is real, then apply a
                // real symmetric Jacobi rotation.
                const Complex phase_conj = std::conj(apq) / r;
                const Real app = std::real(m(p, p));
                const Real aqq = std::real(m(q, q));
                const Real theta = (aqq - app) / (Real(2) * r);
                const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const Real c = Real(1) / std::sqrt(t * t + 1);
                const Real s = t * c;

                const Complex g_pp = c;
                const Complex g_pq = s;
                const Complex g_qp = -s * phase_conj;
                const Complex g_qq = c * phase_conj;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex mkp = m(k, p);
                    const Complex mkq = m(k, q);
                    m(k, p) = mkp * g_pp + mkq * g_qp;
                    m(k, q) = mkp * g_pq + mkq * g_qq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex mpk = m(p, k);
                    const Complex mqk = m(q, k);
                    m(p, k) = std::conj(g_pp) * mpk + std::conj(g_qp) * mqk;
                    m(q, k) = std::conj(g_pq) * mpk + std::conj(g_qq) * mqk;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * g_pp + vkq * g_qp;
                    v(k, q) = vkp * g_pq + vkq * g_qq;
                }
                m(p, q) = 0;
                m(q, p) = 0;
                m(p, p) = app - t * r;
                m(q, q) = aqq + t * r;
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return std::real(m(i, i)) < std::real(m(j, j)); });

    EigenDecomposition<Real> out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[k] = std::real(m(order[k], order[k]));
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-8, 0) are
/// treated as zero; anything more negative raises NotPsdError.
template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> matrix_sqrt_psd(const Eigen::MatrixBase<Derived> &a) {
    using Real = typename Derived::RealScalar;
    auto eig = hermitian_eig(a);
    if (eig.values.size() > 0 && eig.values[0] < -Real(Tolerance::negative_eigenvalue)) {
        std::ostringstream msg;
        msg << "matrix_sqrt_psd: matrix is not PSD (eigenvalue " << eig.values[0] << ")";
        throw NotPsdError(msg.str(), static_cast<double>(eig.values[0]));
    }
    return detail::spectral_map(eig, [](Real x) { return x > 0 ? std::sqrt(x) : Real(0); });
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
template <typename Derived>
typename Derived::RealScalar trace_norm(const Eigen::MatrixBase<Derived> &a) {
    auto eig = hermitian_eig(a);
    return eig.values.cwiseAbs().sum();
}

/// Sum of singular values of an arbitrary matrix.
template <typename Derived>
typename Derived::RealScalar nuclear_norm(const Eigen::MatrixBase<Derived> &a) {
    using Real = typename Derived::RealScalar;
    Eigen::JacobiSVD<ComplexMatrix<Real>> svd(a.eval());
    return svd.singularValues().sum();
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Scalar = typename DerivedA::Scalar;
    return Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(Eigen::kroneckerProduct(a.eval(), b.eval()));
}

/// Partial trace onto the qubits listed in `keep` (sorted, distinct).
///
/// Qubit k is bit k of the basis index (little-endian). In the result the
/// kept qubits are renumbered 0..|keep|-1 in the order given.
template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> partial_trace(const Eigen::MatrixBase<Derived> &a, int n_qubits,
                                                           const std::vector<int> &keep) {
    using Real = typename Derived::RealScalar;
    if (n_qubits < 0 || n_qubits > 30) {
        throw DimensionError("partial_trace: unsupported qubit count " + std::to_string(n_qubits));
    }
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (a.rows() != dim || a.cols() != dim) {
        throw DimensionError("partial_trace: expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                             " matrix for " + std::to_string(n_qubits) + " qubits");
    }
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n_qubits) {
            throw IndexError("partial_trace: qubit index " + std::to_string(keep[i]) + " out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw IndexError("partial_trace: keep set must be sorted and distinct");
        }
    }
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            traced.push_back(q);
        }
    }
    auto scatter = [](uint64_t bits, const std::vector<int> &positions) {
        uint64_t out = 0;
        for (size_t k = 0; k < positions.size(); ++k) {
            out |= ((bits >> k) & 1u) << positions[k];
        }
        return out;
    };

    const Eigen::Index kept_dim = Eigen::Index{1} << keep.size();
    const uint64_t traced_dim = uint64_t{1} << traced.size();
    ComplexMatrix<Real> out = ComplexMatrix<Real>::Zero(kept_dim, kept_dim);
    for (Eigen::Index i = 0; i < kept_dim; ++i) {
        const uint64_t row_base = scatter(static_cast<uint64_t>(i), keep);
        for (Eigen::Index j = 0; j < kept_dim; ++j) {
            const uint64_t col_base = scatter(static_cast<uint64_t>(j), keep);
            std::complex<Real> acc = 0;
            for (uint64_t t = 0; t < traced_dim; ++t) {
                const uint64_t off = scatter(t, traced);
                acc += a(static_cast<Eigen::Index>(row_base | off), static_cast<Eigen::Index>(col_base | off));
            }
            out(i, j) = acc;
        }
    }
    return out;
}

/// Nearest PSD matrix with the given trace, by eigenvalue truncation.
///
/// Eigenvalues are visited from the smallest up; each negative one is zeroed
/// and its deficit spread evenly over the ones still alive, until the
/// smallest survivor stays non-negative. The spectrum is then rescaled to
/// `target_trace`. Idempotent on its own output.
template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> psd_project(const Eigen::MatrixBase<Derived> &a, double target_trace) {
    using Real = typename Derived::RealScalar;
    if (!(target_trace > 0)) {
        throw DegenerateInputError("psd_project: target trace must be positive");
    }
    auto eig = hermitian_eig(a);
    const Eigen::Index n = eig.values.size();
    if (n == 0 || eig.values[n - 1] <= 0) {
        throw DegenerateInputError("psd_project: all eigenvalues are non-positive");
    }

    RealVector<Real> lam = eig.values;  // ascending
    const Real total = lam.sum();
    if (total > 0) {
        Real deficit = 0;
        Eigen::Index alive = n;
        Eigen::Index k = 0;
        while (k < n && lam[k] + deficit / Real(alive) < 0) {
            deficit += lam[k];
            lam[k] = 0;
            --alive;
            ++k;
        }
        for (Eigen::Index j = k; j < n; ++j) {
            lam[j] += deficit / Real(alive);
        }
    } else {
        lam = lam.cwiseMax(Real(0));
    }
    lam *= Real(target_trace) / lam.sum();

    EigenDecomposition<Real> fixed{lam, eig.vectors};
    return detail::spectral_map(fixed, [](Real x) { return x; });
}

}  // namespace qunit::qmath
