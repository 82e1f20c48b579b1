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

#include "qunit/qmath.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qunit/errors.hpp"

using namespace qunit;
using qunit::testing::random_density;

namespace {

CMatrix random_hermitian(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix a(d, d);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        a.data()[i] = Complex(g(rng), g(rng));
    }
    return (a + a.adjoint()) / 2.0;
}

}  // namespace

TEST(HermitianEig, MatchesReferenceSolver) {
    std::mt19937_64 rng(11);
    for (int d : {1, 2, 3, 4, 7, 8, 16, 64}) {
        const CMatrix a = random_hermitian(d, rng);
        const auto eig = qmath::hermitian_eig(a);
        Eigen::SelfAdjointEigenSolver<CMatrix> ref(a);
        EXPECT_LE((eig.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10 * (1 + a.norm())) << d;
        const CMatrix rebuilt = eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
        EXPECT_LE(qmath::max_abs(rebuilt - a), 1e-10 * (1 + a.norm()));
        EXPECT_LE(qmath::max_abs(eig.vectors.adjoint() * eig.vectors - CMatrix::Identity(d, d)), 1e-12);
        for (Eigen::Index i = 1; i < d; ++i) {
            EXPECT_LE(eig.values(i - 1), eig.values(i));
        }
    }
}

TEST(HermitianEig, DiagonalAndDegenerateInputs) {
    CMatrix a = CMatrix::Zero(4, 4);
    a.diagonal() << 3, -1, 2, 2;
    const auto eig = qmath::hermitian_eig(a);
    EXPECT_NEAR(eig.values(0), -1, 1e-15);
    EXPECT_NEAR(eig.values(3), 3, 1e-15);
    const auto zero = qmath::hermitian_eig(CMatrix::Zero(3, 3).eval());
    EXPECT_EQ(zero.values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(HermitianEig, WorksInSinglePrecision) {
    Eigen::MatrixXcf a(2, 2);
    a << 2.0f, std::complex<float>(0, 1), std::complex<float>(0, -1), 2.0f;
    const auto eig = qmath::hermitian_eig(a);
    EXPECT_NEAR(eig.values(0), 1.0f, 1e-5f);
    EXPECT_NEAR(eig.values(1), 3.0f, 1e-5f);
}

TEST(HermitianEig, RejectsNonHermitian) {
    CMatrix a(2, 2);
    a << 1, 1, 0, 1;
    EXPECT_THROW(qmath::hermitian_eig(a), DimensionError);
    EXPECT_THROW(qmath::trace_norm(a), DimensionError);
    EXPECT_THROW(qmath::hermitian_eig(CMatrix::Zero(2, 3).eval()), DimensionError);
}

TEST(MatrixSqrt, SquaresBackToInput) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        const CMatrix rho = random_density(n, 1 << n, rng);
        const CMatrix s = qmath::matrix_sqrt_psd(rho);
        EXPECT_LE(qmath::max_abs(s * s - rho), 1e-12);
        EXPECT_LE(qmath::max_abs(s - qunit::testing::reference_sqrt(rho)), 1e-10);
    }
}

TEST(MatrixSqrt, RejectsClearlyNegativeSpectrum) {
    CMatrix a = CMatrix::Identity(2, 2);
    a(1, 1) = -0.1;
    EXPECT_THROW(qmath::matrix_sqrt_psd(a), NotPsdError);
    a(1, 1) = -1e-10;
    EXPECT_NO_THROW(qmath::matrix_sqrt_psd(a));
}

TEST(Norms, TraceAndNuclearNormAgreeOnHermitian) {
    std::mt19937_64 rng(9);
    const CMatrix a = random_hermitian(6, rng);
    EXPECT_NEAR(qmath::trace_norm(a), qmath::nuclear_norm(a), 1e-10);
    CMatrix d = CMatrix::Zero(2, 2);
    d.diagonal() << 0.75, -0.25;
    EXPECT_DOUBLE_EQ(qmath::trace_norm(d), 1.0);
}

TEST(Kron, MatchesHandWrittenProduct) {
    std::mt19937_64 rng(3);
    const CMatrix a = random_hermitian(2, rng);
    const CMatrix b = random_hermitian(4, rng);
    EXPECT_LE(qmath::max_abs(qmath::kron(a, b) - qunit::testing::reference_kron(a, b)), 0.0);
}

TEST(PartialTrace, ProductStatesFactorize) {
    std::mt19937_64 rng(21);
    const CMatrix r0 = random_density(1, 2, rng);
    const CMatrix r1 = random_density(1, 2, rng);
    const CMatrix r2 = random_density(1, 2, rng);
    // Qubit 2 is leftmost in the Kronecker order.
    const CMatrix full = qmath::kron(qmath::kron(r2, r1), r0);
    EXPECT_LE(qmath::max_abs(qmath::partial_trace(full, 3, {0}) - r0), 1e-14);
    EXPECT_LE(qmath::max_abs(qmath::partial_trace(full, 3, {1}) - r1), 1e-14);
    EXPECT_LE(qmath::max_abs(qmath::partial_trace(full, 3, {0, 2}) - qmath::kron(r2, r0)), 1e-14);
    EXPECT_LE(qmath::max_abs(qmath::partial_trace(full, 3, {0, 1, 2}) - full), 0.0);
}

TEST(PartialTrace, ValidatesArguments) {
    const CMatrix a = CMatrix::Identity(4, 4);
    EXPECT_THROW(qmath::partial_trace(a, 3, {0}), DimensionError);
    EXPECT_THROW(qmath::partial_trace(a, 2, {1, 0}), IndexError);
    EXPECT_THROW(qmath::partial_trace(a, 2, {2}), IndexError);
    EXPECT_THROW(qmath::partial_trace(a, 2, {0, 0}), IndexError);
}

TEST(PsdProject, LeavesValidStatesAlone) {
    std::mt19937_64 rng(4);
    const CMatrix rho = random_density(2, 4, rng);
    EXPECT_LE(qmath::max_abs(qmath::psd_project(rho, 1.0) - rho), 1e-12);
}

TEST(PsdProject, RedistributesNegativeMass) {
    CMatrix a = CMatrix::Zero(3, 3);
    a.diagonal() << 0.6, 0.5, -0.1;
    const CMatrix p = qmath::psd_project(a, 1.0);
    const auto eig = qmath::hermitian_eig(p);
    EXPECT_NEAR(eig.values(0), 0.0, 1e-15);
    EXPECT_NEAR(eig.values(1), 0.45, 1e-12);
    EXPECT_NEAR(eig.values(2), 0.55, 1e-12);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
}

TEST(PsdProject, ScalesToTargetTrace) {
    std::mt19937_64 rng(8);
    const CMatrix a = random_hermitian(4, rng);
    for (double target : {1.0, 4.0}) {
        const CMatrix p = qmath::psd_project(a, target);
        EXPECT_NEAR(p.trace().real(), target, 1e-10);
        EXPECT_GE(qmath::hermitian_eig(p).values(0), -1e-12);
    }
}

TEST(PsdProject, AllNonPositiveSpectrumIsDegenerate) {
    const CMatrix a = -CMatrix::Identity(2, 2);
    EXPECT_THROW(qmath::psd_project(a, 1.0), DegenerateInputError);
}

namespace {

CMatrix bell_projector() {
    CVector psi = CVector::Zero(4);
    psi(0) = 1 / std::sqrt(2.0);
    psi(3) = -1 / std::sqrt(2.0);
    return psi * psi.adjoint();
}

}  // namespace

TEST(MatrixSqrt, WorkedExamples) {
    CMatrix d = CMatrix::Zero(2, 2);
    d.diagonal() << 4, 9;
    CMatrix expect = CMatrix::Zero(2, 2);
    expect.diagonal() << 2, 3;
    EXPECT_LE(qmath::max_abs(qmath::matrix_sqrt_psd(d) - expect), 1e-14);
    EXPECT_LE(qmath::max_abs(qmath::matrix_sqrt_psd(CMatrix::Identity(4, 4).eval()) - CMatrix::Identity(4, 4)), 1e-15);
    const CMatrix bell = bell_projector();
    ASSERT_LE(qmath::max_abs(bell * bell - bell), 1e-15);
    EXPECT_LE(qmath::max_abs(qmath::matrix_sqrt_psd(bell) - bell), 1e-12);
}

TEST(Norms, TraceNormWorkedExamples) {
    EXPECT_EQ(qmath::trace_norm(CMatrix::Zero(3, 3).eval()), 0.0);
    CMatrix d = CMatrix::Zero(2, 2);
    d.diagonal() << 1, -1;
    EXPECT_NEAR(qmath::trace_norm(d), 2.0, 1e-15);

    CVector faulty = CVector::Zero(4);
    faulty(1) = faulty(3) = 1 / std::sqrt(2.0);
    const CMatrix diff = bell_projector() - faulty * faulty.adjoint();
    EXPECT_NEAR(qmath::trace_norm(diff), 2 * std::sqrt(0.75), 1e-10);
}

TEST(Norms, TraceNormBoundsTrace) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
        const CMatrix a = random_hermitian(5, rng);
        EXPECT_GE(qmath::trace_norm(a) + 1e-12, std::abs(a.trace().real()));
    }
}

TEST(Kron, WorkedExamples) {
    const CMatrix i2 = CMatrix::Identity(2, 2);
    EXPECT_EQ(qmath::kron(i2, i2), CMatrix::Identity(4, 4));
    CMatrix x(2, 2);
    x << 0, 1, 1, 0;
    const CMatrix xi = qmath::kron(x, i2);
    CMatrix expect = CMatrix::Zero(4, 4);
    expect.block(0, 2, 2, 2) = i2;
    expect.block(2, 0, 2, 2) = i2;
    EXPECT_EQ(xi, expect);
}

TEST(Kron, MixedProductProperty) {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    auto rnd = [&] {
        CMatrix m(2, 2);
        for (Eigen::Index i = 0; i < 4; ++i) {
            m.data()[i] = Complex(g(rng), g(rng));
        }
        return m;
    };
    for (int k = 0; k < 10; ++k) {
        const CMatrix a = rnd(), b = rnd(), c = rnd(), d = rnd();
        EXPECT_LE(qmath::max_abs(qmath::kron(a, b) * qmath::kron(c, d) - qmath::kron(a * c, b * d)), 1e-12);
    }
}

TEST(PartialTrace, BellMarginalsAreMaximallyMixed) {
    const CMatrix bell = bell_projector();
    const CMatrix half = CMatrix::Identity(2, 2) / 2.0;
    EXPECT_LE(qmath::max_abs(qmath::partial_trace(bell, 2, {0}) - half), 1e-15);
    EXPECT_LE(qmath::max_abs(qmath::partial_trace(bell, 2, {1}) - half), 1e-15);
}

TEST(PartialTrace, PreservesTrace) {
    std::mt19937_64 rng(41);
    const CMatrix rho = random_density(4, 16, rng);
    for (const auto &keep : std::vector<std::vector<int>>{{}, {0}, {3}, {1, 2}, {0, 1, 3}}) {
        EXPECT_NEAR(qmath::partial_trace(rho, 4, keep).trace().real(), 1.0, 1e-12);
    }
}

TEST(PsdProject, WorkedExamples) {
    CMatrix a = CMatrix::Zero(2, 2);
    a.diagonal() << 1.1, -0.1;
    CMatrix expect = CMatrix::Zero(2, 2);
    expect(0, 0) = 1;
    EXPECT_LE(qmath::max_abs(qmath::psd_project(a, 1.0) - expect), 1e-12);
    a.diagonal() << 0.6, 0.6;
    EXPECT_LE(qmath::max_abs(qmath::psd_project(a, 1.0) - CMatrix::Identity(2, 2) / 2.0), 1e-12);
}

TEST(PsdProject, IsIdempotent) {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 10; ++k) {
        const CMatrix once = qmath::psd_project(random_hermitian(4, rng), 1.0);
        EXPECT_LE(qmath::max_abs(qmath::psd_project(once, 1.0) - once), 1e-12);
    }
}
