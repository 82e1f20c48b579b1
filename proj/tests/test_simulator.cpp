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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qunit/errors.hpp"
#include "qunit/qmath.hpp"

using namespace qunit;
namespace ref = qunit::testing;

namespace {

DensityMatrix bell_state() {
    return evolve(DensityMatrix::zero_state(2), Circuit(2).x(0).h(0).cx(0, 1));
}

}  // namespace

TEST(Evolve, WorkedExamples) {
    std::mt19937_64 rng(1);
    const DensityMatrix rho(ref::random_density(2, 4, rng));
    EXPECT_EQ(evolve(rho, Circuit(2)).matrix(), rho.matrix());

    CMatrix expect = CMatrix::Zero(4, 4);
    expect(0, 0) = expect(3, 3) = 0.5;
    expect(0, 3) = expect(3, 0) = -0.5;
    EXPECT_LE(qmath::max_abs(bell_state().matrix() - expect), 1e-15);

    NoiseModel full;
    full.depolarizing_1q = 1.0;
    for (int k = 0; k < 5; ++k) {
        const DensityMatrix in(ref::random_density(1, 1, rng));
        const auto out = evolve(in, Circuit(1).h(0), full);
        EXPECT_LE(qmath::max_abs(out.matrix() - CMatrix::Identity(2, 2) / 2.0), 1e-14);
    }
}

TEST(Evolve, DimensionMismatch) {
    EXPECT_THROW(evolve(DensityMatrix::zero_state(1), Circuit(2)), DimensionError);
}

TEST(Evolve, NoiselessMatchesUnitaryConjugation) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        const Circuit c = ref::random_circuit(n, 10, rng);
        const CMatrix rho = ref::random_density(n, 2, rng);
        const CMatrix u = ref::reference_unitary(c);
        EXPECT_LE(qmath::max_abs(evolve(DensityMatrix(rho), c).matrix() - u * rho * u.adjoint()), 1e-10);
    }
}

TEST(Evolve, NoisyEvolutionPreservesTraceAndPositivity) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> p(0.0, 0.3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        const NoiseModel noise{p(rng), p(rng), p(rng), 0.0};
        const auto out = evolve(DensityMatrix(ref::random_density(n, 1, rng)), ref::random_circuit(n, 10, rng), noise);
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-9);
        EXPECT_GE(qmath::hermitian_eig(out.matrix()).values(0), -1e-10);
    }
}

TEST(Evolve, DepolarizingNeverRaisesPurity) {
    std::mt19937_64 rng(4);
    for (double p : {0.001, 0.01, 0.1, 0.5, 1.0}) {
        NoiseModel noise;
        noise.depolarizing_1q = p;
        noise.depolarizing_2q = p;
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 1 + trial % 2;
            const DensityMatrix in(ref::random_density(n, 1 + trial % 2, rng));
            Circuit c(n);
            c.z(0);
            if (n == 2) {
                c.cz(0, 1);
            }
            EXPECT_LE(evolve(in, c, noise).purity(), in.purity() + 1e-9);
        }
    }
}

TEST(Evolve, AmplitudeDampingDecaysExcitedState) {
    NoiseModel noise;
    noise.amplitude_damping = 0.2;
    const auto out = evolve(DensityMatrix::zero_state(1), Circuit(1).x(0), noise);
    EXPECT_NEAR(out.matrix()(1, 1).real(), 0.8, 1e-14);
    EXPECT_NEAR(out.matrix()(0, 0).real(), 0.2, 1e-14);
}

TEST(NoiseModel, Validation) {
    EXPECT_NO_THROW(NoiseModel::default_preset().validate());
    EXPECT_THROW((NoiseModel{-0.1, 0, 0, 0}.validate()), Error);
    EXPECT_THROW((NoiseModel{0, 0, 0, 1.5}.validate()), Error);
}

TEST(Sample, WorkedExamples) {
    const Counts zero = sample(DensityMatrix::zero_state(1), std::nullopt, 100, 7);
    EXPECT_EQ(zero.shots, 100u);
    EXPECT_EQ(zero[0], 100u);
    EXPECT_EQ(zero.tallies.size(), 1u);

    const Counts bell = sample(bell_state(), std::nullopt, 3000, 8);
    EXPECT_EQ(bell[0] + bell[3], 3000u);
    const double sigma = std::sqrt(3000 * 0.25);
    EXPECT_LE(std::abs(static_cast<double>(bell[0]) - 1500), 5 * sigma);

    EXPECT_EQ(sample(bell_state(), std::nullopt, 3000, 8), bell);
    EXPECT_NE(sample(bell_state(), std::nullopt, 3000, 9), bell);
}

TEST(Sample, ConvergesToExactDistribution) {
    std::mt19937_64 rng(5);
    const uint64_t shots = 100000;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 3;
        const DensityMatrix state(ref::random_density(n, 2, rng));
        const auto exact = exact_distribution(state);
        const Counts counts = sample(state, std::nullopt, shots, 1000 + static_cast<uint64_t>(trial));
        for (size_t i = 0; i < exact.size(); ++i) {
            const double p = exact[i];
            const double freq = static_cast<double>(counts[i]) / static_cast<double>(shots);
            EXPECT_LE(std::abs(freq - p), 5 * std::sqrt(p * (1 - p) / static_cast<double>(shots)) + 1e-12);
        }
    }
}

TEST(Sample, PremeasureRotation) {
    const Counts c = sample(DensityMatrix::zero_state(1), Circuit(1).h(0).h(0), 50, 1);
    EXPECT_EQ(c[0], 50u);
}

TEST(Sample, ReadoutFlipMatchesTransformedDistribution) {
    NoiseModel noise;
    noise.readout_flip = 0.1;
    const uint64_t shots = 200000;
    const Counts c = sample(DensityMatrix::zero_state(2), std::nullopt, shots, 3, noise);
    const auto flipped = apply_readout_flip(exact_distribution(DensityMatrix::zero_state(2)), 0.1);
    EXPECT_NEAR(flipped[0], 0.81, 1e-15);
    EXPECT_NEAR(flipped[3], 0.01, 1e-15);
    for (size_t i = 0; i < 4; ++i) {
        const double p = flipped[i];
        EXPECT_NEAR(static_cast<double>(c[i]) / shots, p, 5 * std::sqrt(p * (1 - p) / shots));
    }
}

TEST(ExactDistribution, WorkedExamples) {
    const auto bell = exact_distribution(bell_state());
    EXPECT_EQ(bell.probs(), (std::vector<double>{0.5, 0, 0, 0.5}));
    const auto mutated = exact_distribution(evolve(DensityMatrix::zero_state(2), Circuit(2).x(0).h(1).cx(0, 1)));
    EXPECT_NEAR(mutated[0], 0.0, 1e-15);
    EXPECT_NEAR(mutated[1], 0.5, 1e-15);
    EXPECT_NEAR(mutated[2], 0.0, 1e-15);
    EXPECT_NEAR(mutated[3], 0.5, 1e-15);
    EXPECT_EQ(exact_distribution(DensityMatrix::maximally_mixed(1)).probs(), (std::vector<double>{0.5, 0.5}));
}

TEST(Marginalize, KeepsRequestedQubits) {
    Counts c;
    c.n_qubits = 3;
    c.shots = 10;
    c.tallies = {{0b101, 4}, {0b011, 6}};
    const Counts m = marginalize(c, {0, 2});
    EXPECT_EQ(m.n_qubits, 2);
    EXPECT_EQ(m.shots, 10u);
    EXPECT_EQ(m[0b11], 4u);
    EXPECT_EQ(m[0b01], 6u);
}
