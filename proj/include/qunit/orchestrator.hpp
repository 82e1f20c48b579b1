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

// Test suites: named cases, each a subject circuit plus an ordered list of
// polymorphic equality assertions. run_suite executes every assertion with
// its own derived seed and never stops at a failure.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qunit/protocols.hpp"

namespace qunit {

struct AssertionSpec {
    ExpectedValue expected;
    std::optional<uint64_t> shots;
    std::optional<double> threshold;
};

struct TestCase {
    std::string name;
    Circuit subject;
    std::vector<AssertionSpec> assertions;
};

struct SuiteDefaults {
    uint64_t shots = 3000;
    uint64_t seed = 0;
    double threshold = 0.5;
    std::optional<NoiseModel> noise;
};

struct TestSuite {
    std::string name;
    int n_qubits = 1;
    std::vector<TestCase> cases;
    SuiteDefaults defaults;
    bool save_data = false;
};

/// Throws ValidationError naming the offending case/assertion.
void validate_suite(const TestSuite &suite);

/// Seed for one assertion: a hash of the master seed, the case name and the
/// assertion's position within the case.
uint64_t assertion_seed(uint64_t master_seed, std::string_view case_name, size_t ordinal);

/// Effective configuration of one assertion after applying overrides.
RunConfig assertion_config(const TestSuite &suite, const TestCase &test_case, size_t ordinal);

struct AssertionRecord {
    std::string expected_kind;
    AssertionResult result;
    std::optional<Artifacts> artifacts;  // only with save_data

    bool operator==(const AssertionRecord &) const = default;
};

struct CaseReport {
    std::string name;
    bool passed = false;
    std::vector<AssertionRecord> assertions;

    bool operator==(const CaseReport &) const = default;
};

struct ReportSummary {
    size_t cases = 0;
    size_t cases_passed = 0;
    size_t assertions = 0;
    size_t assertions_passed = 0;

    bool operator==(const ReportSummary &) const = default;
};

struct TestReport {
    std::string suite;
    std::vector<CaseReport> cases;
    ReportSummary summary;

    bool all_passed() const {
        return summary.cases_passed == summary.cases;
    }
    bool operator==(const TestReport &) const = default;
};

/// Results are assembled in declaration order whatever `jobs` is.
TestReport run_suite(const TestSuite &suite, int jobs = 1);

enum class ReportFormat { Text, Json };

/// Text: one "[PASSED]/[FAILED]: with a 0.xxx probability of passing." line
/// per assertion. Json: the full report including diagnostics.
std::string format_report(const TestReport &report, ReportFormat format);

/// Inverse of format_report(..., Json).
TestReport parse_report_json(std::string_view text);

}  // namespace qunit
