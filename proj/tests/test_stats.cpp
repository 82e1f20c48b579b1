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

#include "qunit/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "qunit/errors.hpp"
#include "qunit/random.hpp"

using namespace qunit;

namespace {

Counts make_counts(int n, std::map<uint64_t, uint64_t> tallies) {
    Counts c;
    c.n_qubits = n;
    c.tallies = std::move(tallies);
    for (const auto &[k, v] : c.tallies) {
        c.shots += v;
    }
    return c;
}

}  // namespace

TEST(GammaQ, ClosedForms) {
    EXPECT_EQ(regularized_gamma_q(2.5, 0.0), 1.0);
    EXPECT_NEAR(regularized_gamma_q(1.0, 1.0), std::exp(-1.0), 1e-10);
    for (double x : {0.1, 0.5, 2.0, 7.0, 30.0}) {
        EXPECT_NEAR(regularized_gamma_q(1.0, x), std::exp(-x), 1e-10);
        EXPECT_NEAR(regularized_gamma_q(2.0, x), (1 + x) * std::exp(-x), 1e-10);
        EXPECT_NEAR(regularized_gamma_q(0.5, x), std::erfc(std::sqrt(x)), 1e-10);
    }
}

TEST(GammaQ, DecreasesToZero) {
    double prev = 1.0;
    for (double x = 0.5; x < 200; x *= 1.5) {
        const double q = regularized_gamma_q(0.5, x);
        EXPECT_LE(q, prev);
        prev = q;
    }
    EXPECT_LT(prev, 1e-40);
}

TEST(GammaQ, MatchesQuadratureOracle) {
    for (double s : {0.5, 1.5, 3.0, 7.5, 20.0}) {
        for (double x : {0.2, 1.0, 4.0, 15.0, 40.0}) {
            EXPECT_NEAR(regularized_gamma_q(s, x), qunit::testing::reference_gamma_q(s, x), 1e-8) << s << " " << x;
        }
    }
}

TEST(Chi2Survival, CriticalValue) {
    EXPECT_NEAR(chi2_survival(3.841, 1), 0.05, 5e-4);
    EXPECT_NEAR(chi2_survival(5.991, 2), 0.05, 5e-4);
    EXPECT_THROW(chi2_survival(1.0, 0), DegenerateInputError);
}

TEST(Chi2Gof, PerfectAgreement) {
    const auto r = chi2_gof(make_counts(2, {{0, 250}, {1, 250}, {2, 250}, {3, 250}}),
                            OutcomeDistribution({0.25, 0.25, 0.25, 0.25}));
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.dof, 3);
    EXPECT_NEAR(r.p_value, 1.0, 1e-12);
}

TEST(Chi2Gof, ForbiddenBinHitIsDecisive) {
    const auto r = chi2_gof(make_counts(2, {{1, 1500}, {3, 1500}}), OutcomeDistribution({0.5, 0, 0, 0.5}));
    EXPECT_TRUE(std::isinf(r.statistic));
    EXPECT_EQ(r.p_value, 0.0);
}

TEST(Chi2Gof, ForbiddenBinsAreExcludedFromDof) {
    const auto r = chi2_gof(make_counts(2, {{0, 1400}, {3, 1600}}), OutcomeDistribution({0.5, 0, 0, 0.5}));
    EXPECT_EQ(r.dof, 1);
    EXPECT_NEAR(r.statistic, 2 * 100.0 * 100.0 / 1500.0, 1e-12);
    EXPECT_NEAR(r.p_value, regularized_gamma_q(0.5, r.statistic / 2), 1e-15);
}

TEST(Chi2Gof, DeterministicExpectation) {
    const auto ok = chi2_gof(make_counts(2, {{0, 100}}), OutcomeDistribution({1, 0, 0, 0}));
    EXPECT_EQ(ok.p_value, 1.0);
    const auto bad = chi2_gof(make_counts(2, {{0, 99}, {2, 1}}), OutcomeDistribution({1, 0, 0, 0}));
    EXPECT_EQ(bad.p_value, 0.0);
}

TEST(Chi2Gof, Errors) {
    EXPECT_THROW(chi2_gof(make_counts(1, {{0, 5}}), OutcomeDistribution({0.25, 0.25, 0.25, 0.25})), DimensionError);
    EXPECT_THROW(chi2_gof(make_counts(1, {}), OutcomeDistribution({0.5, 0.5})), Error);
}

TEST(Chi2Gof, PValueMonotoneInStatistic) {
    for (int dof : {1, 2, 3, 7, 15}) {
        double prev = 1.0;
        for (double stat = 0; stat < 80; stat += 0.25) {
            const double p = chi2_survival(stat, dof);
            EXPECT_LE(p, prev + 1e-15);
            EXPECT_GE(p, 0.0);
            prev = p;
        }
    }
}

TEST(Chi2Gof, PermutationInvariant) {
    const std::vector<double> probs{0.1, 0.2, 0.3, 0.4};
    const std::map<uint64_t, uint64_t> tallies{{0, 12}, {1, 18}, {2, 33}, {3, 37}};
    const auto base = chi2_gof(make_counts(2, tallies), OutcomeDistribution(probs));
    std::vector<uint64_t> perm{0, 1, 2, 3};
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<double> p2(4);
        std::map<uint64_t, uint64_t> t2;
        for (uint64_t i = 0; i < 4; ++i) {
            p2[perm[i]] = probs[i];
            t2[perm[i]] = tallies.at(i);
        }
        const auto r = chi2_gof(make_counts(2, t2), OutcomeDistribution(p2));
        EXPECT_NEAR(r.statistic, base.statistic, 1e-12);
        EXPECT_NEAR(r.p_value, base.p_value, 1e-12);
    }
}

TEST(Chi2Gof, NullRejectionRateNearNominalSize) {
    const DensityMatrix state = evolve(DensityMatrix::zero_state(2), Circuit(2).ry(0, 1.1).h(1));
    const auto expected = exact_distribution(state);
    int rejected = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        const auto counts = sample(state, std::nullopt, 3000, derive_seed(2024, static_cast<uint64_t>(t)));
        rejected += chi2_gof(counts, expected).p_value < 0.05 ? 1 : 0;
    }
    const double rate = static_cast<double>(rejected) / trials;
    EXPECT_GE(rate, 0.02);
    EXPECT_LE(rate, 0.09);
}
