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

#include <cmath>
#include <limits>
#include <sstream>

#include "qunit/errors.hpp"

namespace qunit {

namespace {

constexpr int kMaxIterations = 100000;
constexpr double kEps = 1e-16;
constexpr double kForbidden = 1e-12;

// Lower regularized gamma P(s, x) by its power series.
double gamma_p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int k = 1; k < kMaxIterations; ++k) {
        term *= x / (s + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
        }
    }
    std::ostringstream msg;
    msg << "regularized_gamma_q: series did not converge for s=" << s << ", x=" << x;
    throw NumericError(msg.str());
}

// Upper regularized gamma Q(s, x) by modified Lentz continued fraction.
double gamma_q_continued_fraction(double s, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
        }
    }
    std::ostringstream msg;
    msg << "regularized_gamma_q: continued fraction did not converge for s=" << s << ", x=" << x;
    throw NumericError(msg.str());
}

}  // namespace

double regularized_gamma_q(double s, double x) {
    if (!(s > 0) || !(x >= 0) || std::isnan(x)) {
        std::ostringstream msg;
        msg << "regularized_gamma_q: requires s > 0 and x >= 0 (s=" << s << ", x=" << x << ")";
        throw NumericError(msg.str());
    }
    if (x == 0) {
        return 1.0;
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    double q = x < s + 1.0 ? 1.0 - gamma_p_series(s, x) : gamma_q_continued_fraction(s, x);
    return std::clamp(q, 0.0, 1.0);
}

double chi2_survival(double statistic, int dof) {
    if (dof < 1) {
        throw DegenerateInputError("chi2_survival: degrees of freedom must be positive");
    }
    if (std::isinf(statistic)) {
        return 0.0;
    }
    return regularized_gamma_q(0.5 * dof, 0.5 * statistic);
}

Chi2Result chi2_gof(const Counts &observed, const OutcomeDistribution &expected) {
    if (observed.n_qubits != expected.n_qubits()) {
        throw DimensionError("chi2_gof: " + std::to_string(observed.n_qubits) + "-qubit counts vs " +
                             std::to_string(expected.n_qubits()) + "-qubit distribution");
    }
    if (observed.shots < 1) {
        throw DegenerateInputError("chi2_gof: no shots observed");
    }
    const double shots = static_cast<double>(observed.shots);

    int allowed = 0;
    bool has_forbidden = false;
    bool forbidden_hit = false;
    double statistic = 0;
    for (size_t i = 0; i < expected.size(); ++i) {
        const double p = expected[i];
        const auto o = static_cast<double>(observed[i]);
        if (p < kForbidden) {
            has_forbidden = true;
            forbidden_hit = forbidden_hit || o > 0;
            continue;
        }
        ++allowed;
        const double e = shots * p;
        statistic += (o - e) * (o - e) / e;
    }

    Chi2Result out;
    out.dof = allowed - 1;
    if (forbidden_hit) {
        out.statistic = std::numeric_limits<double>::infinity();
        out.p_value = 0;
        return out;
    }
    if (out.dof == 0) {
        if (!has_forbidden) {
            throw DegenerateInputError("chi2_gof: a single outcome bin leaves no degrees of freedom");
        }
        // Deterministic expectation met exactly.
        out.statistic = 0;
        out.p_value = 1;
        return out;
    }
    out.statistic = statistic;
    out.p_value = chi2_survival(statistic, out.dof);
    return out;
}

}  // namespace qunit
