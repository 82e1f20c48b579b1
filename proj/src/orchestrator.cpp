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

#include "qunit/orchestrator.hpp"

#include <fmt/format.h>

#include <set>

#include "qunit/errors.hpp"
#include "qunit/json_io.hpp"
#include "qunit/parallel.hpp"
#include "qunit/random.hpp"

namespace qunit {

namespace {

using json_io::json;

std::string case_where(size_t c) {
    return "cases[" + std::to_string(c) + "]";
}

struct Job {
    size_t case_index;
    size_t assertion_index;
};

}  // namespace

void validate_suite(const TestSuite &suite) {
    if (suite.name.empty()) {
        throw ValidationError("name: suite name must not be empty");
    }
    if (suite.cases.empty()) {
        throw ValidationError("cases: suite has no test cases");
    }
    if (!(suite.defaults.threshold >= 0.0 && suite.defaults.threshold <= 1.0)) {
        throw ValidationError("defaults.threshold: must lie in [0, 1]");
    }
    if (suite.defaults.noise) {
        try {
            suite.defaults.noise->validate();
        } catch (const Error &e) {
            throw ValidationError(std::string("defaults.noise: ") + e.what());
        }
    }
    std::set<std::string> names;
    for (size_t c = 0; c < suite.cases.size(); ++c) {
        const auto &tc = suite.cases[c];
        const auto where = case_where(c);
        if (tc.name.empty()) {
            throw ValidationError(where + ".name: case name must not be empty");
        }
        if (!names.insert(tc.name).second) {
            throw ValidationError(where + ".name: duplicate case name '" + tc.name + "'");
        }
        if (tc.subject.n_qubits() != suite.n_qubits) {
            throw ValidationError(where + ".circuit: circuit has " + std::to_string(tc.subject.n_qubits()) +
                                  " qubit(s), suite declares " + std::to_string(suite.n_qubits));
        }
        if (tc.assertions.empty()) {
            throw ValidationError(where + ".assertions: case '" + tc.name + "' has no assertions");
        }
        for (size_t a = 0; a < tc.assertions.size(); ++a) {
            const auto &spec = tc.assertions[a];
            const auto awhere = where + ".assertions[" + std::to_string(a) + "]";
            if (expected_qubits(spec.expected) != suite.n_qubits) {
                throw ValidationError(awhere + ".value: expected value is on " +
                                      std::to_string(expected_qubits(spec.expected)) + " qubit(s)");
            }
            const auto threshold = spec.threshold.value_or(suite.defaults.threshold);
            if (!(threshold >= 0.0 && threshold <= 1.0)) {
                throw ValidationError(awhere + ".threshold: must lie in [0, 1]");
            }
            const auto protocol = dispatch(spec.expected);
            if (protocol == ProtocolId::Proj && spec.shots.value_or(suite.defaults.shots) == 0) {
                throw ValidationError(awhere + ".shots: distribution assertions need at least one shot");
            }
            if (protocol == ProtocolId::StateTomo && suite.n_qubits > 4) {
                throw ValidationError(awhere + ": state tomography is limited to 4 qubits");
            }
            if (protocol == ProtocolId::ProcessTomo && suite.n_qubits > 3) {
                throw ValidationError(awhere + ": process tomography is limited to 3 qubits");
            }
        }
    }
}

uint64_t assertion_seed(uint64_t master_seed, std::string_view case_name, size_t ordinal) {
    return derive_seed(derive_seed(master_seed, hash_string(case_name)), ordinal);
}

RunConfig assertion_config(const TestSuite &suite, const TestCase &test_case, size_t ordinal) {
    const auto &spec = test_case.assertions.at(ordinal);
    RunConfig config;
    config.backend.noise = suite.defaults.noise;
    config.shots = spec.shots.value_or(suite.defaults.shots);
    config.threshold = spec.threshold.value_or(suite.defaults.threshold);
    config.seed = assertion_seed(suite.defaults.seed, test_case.name, ordinal);
    return config;
}

TestReport run_suite(const TestSuite &suite, int jobs) {
    validate_suite(suite);

    TestReport report;
    report.suite = suite.name;
    std::vector<Job> work;
    for (size_t c = 0; c < suite.cases.size(); ++c) {
        const auto &tc = suite.cases[c];
        report.cases.push_back(CaseReport{tc.name, false, std::vector<AssertionRecord>(tc.assertions.size())});
        for (size_t a = 0; a < tc.assertions.size(); ++a) {
            work.push_back({c, a});
        }
    }

    parallel_for(work.size(), jobs, [&](size_t i) {
        const auto [c, a] = work[i];
        const auto &tc = suite.cases[c];
        const auto &expected = tc.assertions[a].expected;
        ProtocolRun run = run_protocol(dispatch(expected), tc.subject, expected, assertion_config(suite, tc, a));
        AssertionRecord &rec = report.cases[c].assertions[a];
        rec.expected_kind = std::string(expected_kind(expected));
        rec.result = std::move(run.result);
        if (suite.save_data) {
            rec.artifacts = std::move(run.artifacts);
        }
    });

    for (auto &cr : report.cases) {
        cr.passed = std::all_of(cr.assertions.begin(), cr.assertions.end(),
                                [](const AssertionRecord &r) { return r.result.passed; });
        ++report.summary.cases;
        report.summary.cases_passed += cr.passed ? 1 : 0;
        for (const auto &r : cr.assertions) {
            ++report.summary.assertions;
            report.summary.assertions_passed += r.result.passed ? 1 : 0;
        }
    }
    return report;
}

std::string format_report(const TestReport &report, ReportFormat format) {
    if (format == ReportFormat::Text) {
        std::string out;
        for (const auto &cr : report.cases) {
            for (const auto &r : cr.assertions) {
                out += fmt::format("{}: with a {:.3f} probability of passing.\n",
                                   r.result.passed ? "[PASSED]" : "[FAILED]", r.result.probability);
            }
        }
        return out;
    }

    json cases = json::array();
    for (const auto &cr : report.cases) {
        json assertions = json::array();
        for (const auto &r : cr.assertions) {
            json diagnostics = json::object();
            for (const auto &[key, value] : r.result.diagnostics) {
                diagnostics[key] = json_io::number_to_json(value);
            }
            json a = {{"expected", r.expected_kind},
                      {"protocol", std::string(protocol_name(r.result.protocol))},
                      {"probability", r.result.probability},
                      {"threshold", r.result.threshold},
                      {"passed", r.result.passed},
                      {"diagnostics", diagnostics}};
            if (r.artifacts) {
                json artifacts = json::object();
                if (r.artifacts->counts) {
                    artifacts["counts"] = json_io::counts_to_json(*r.artifacts->counts);
                }
                if (r.artifacts->reconstructed) {
                    artifacts["reconstructed"] = json_io::matrix_to_json(*r.artifacts->reconstructed);
                }
                a["artifacts"] = std::move(artifacts);
            }
            assertions.push_back(std::move(a));
        }
        cases.push_back({{"name", cr.name}, {"passed", cr.passed}, {"assertions", std::move(assertions)}});
    }
    json doc = {{"suite", report.suite},
                {"passed", report.all_passed()},
                {"summary",
                 {{"cases", report.summary.cases},
                  {"cases_passed", report.summary.cases_passed},
                  {"assertions", report.summary.assertions},
                  {"assertions_passed", report.summary.assertions_passed}}},
                {"cases", std::move(cases)}};
    return doc.dump(2) + "\n";
}

TestReport parse_report_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("report: ") + e.what());
    }
    using json_io::get_string;
    using json_io::get_uint;
    using json_io::require;

    TestReport report;
    report.suite = get_string(require(doc, "suite", "report"), "suite");
    const json &summary = require(doc, "summary", "report");
    report.summary.cases = get_uint(require(summary, "cases", "summary"), "summary.cases");
    report.summary.cases_passed = get_uint(require(summary, "cases_passed", "summary"), "summary.cases_passed");
    report.summary.assertions = get_uint(require(summary, "assertions", "summary"), "summary.assertions");
    report.summary.assertions_passed =
        get_uint(require(summary, "assertions_passed", "summary"), "summary.assertions_passed");

    const json &cases = require(doc, "cases", "report");
    for (size_t c = 0; c < cases.size(); ++c) {
        const auto where = case_where(c);
        const json &jc = cases[c];
        CaseReport cr;
        cr.name = get_string(require(jc, "name", where), where + ".name");
        cr.passed = require(jc, "passed", where).get<bool>();
        const json &assertions = require(jc, "assertions", where);
        for (size_t a = 0; a < assertions.size(); ++a) {
            const auto awhere = where + ".assertions[" + std::to_string(a) + "]";
            const json &ja = assertions[a];
            AssertionRecord rec;
            rec.expected_kind = get_string(require(ja, "expected", awhere), awhere + ".expected");
            rec.result.protocol = protocol_from_name(get_string(require(ja, "protocol", awhere), awhere));
            rec.result.probability = json_io::get_double(require(ja, "probability", awhere), awhere);
            rec.result.threshold = json_io::get_double(require(ja, "threshold", awhere), awhere);
            rec.result.passed = require(ja, "passed", awhere).get<bool>();
            for (const auto &[key, value] : require(ja, "diagnostics", awhere).items()) {
                rec.result.diagnostics[key] = json_io::number_from_json(value, awhere + ".diagnostics." + key);
            }
            if (auto it = ja.find("artifacts"); it != ja.end()) {
                Artifacts art;
                if (auto c_it = it->find("counts"); c_it != it->end()) {
                    art.counts = json_io::counts_from_json(*c_it, awhere + ".artifacts.counts");
                }
                if (auto m_it = it->find("reconstructed"); m_it != it->end()) {
                    art.reconstructed = json_io::matrix_from_json(*m_it, awhere + ".artifacts.reconstructed");
                }
                rec.artifacts = std::move(art);
            }
            cr.assertions.push_back(std::move(rec));
        }
        report.cases.push_back(std::move(cr));
    }
    return report;
}

}  // namespace qunit
