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

#include "qunit/simulator.hpp"

namespace qunit {

struct Chi2Result {
    double statistic = 0;  // +inf when a forbidden outcome was observed
    int dof = 0;
    double p_value = 1;

    bool operator==(const Chi2Result &) const = default;
};

/// Regularized upper incomplete gamma function Q(s, x) = Gamma(s, x) / Gamma(s).
/// Series for x < s + 1, Lentz continued fraction otherwise.
double regularized_gamma_q(double s, double x);

/// Upper tail of the chi-squared distribution with `dof` degrees of freedom.
double chi2_survival(double statistic, int dof);

/// Pearson goodness-of-fit of observed counts against expected probabilities.
///
/// Outcomes with expected probability below 1e-12 are forbidden: a single
/// observation in one of them gives statistic = +inf and p = 0. Otherwise
/// the statistic runs over the remaining bins with dof = bins - 1. When only
/// one outcome is allowed and it received every shot, the result is
/// statistic 0, dof 0, p = 1.
Chi2Result chi2_gof(const Counts &observed, const OutcomeDistribution &expected);

}  // namespace qunit
