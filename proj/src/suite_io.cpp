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

#include "qunit/suite_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qunit/errors.hpp"
#include "qunit/json_io.hpp"

namespace qunit {

namespace {

using json_io::get_double;
using json_io::get_string;
using json_io::get_uint;
using json_io::json;
using json_io::require;

// nlohmann reports a byte offset; translate it to line:column.
json parse_document(std::string_view text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        size_t line = 1;
        size_t column = 1;
        const size_t end = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                              ": malformed JSON (" + e.what() + ")");
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError(path.string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void reject_unknown(const json &obj, std::initializer_list<std::string_view> known, const std::string &where) {
    for (const auto &[key, value] : obj.items()) {
        bool ok = false;
        for (auto k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw ValidationError((where.empty() ? key : where + "." + key) + ": unknown field");
        }
    }
}

std::optional<NoiseModel> noise_field(const json &j, const std::string &where) {
    if (j.is_null()) {
        return std::nullopt;
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "none") {
            return std::nullopt;
        }
        if (s == "default") {
            return NoiseModel::default_preset();
        }
        throw ValidationError(where + ": unknown noise preset '" + s + "'");
    }
    return json_io::noise_from_json(j, where);
}

int qubit_count(const json &doc) {
    const auto n = get_uint(require(doc, "n_qubits", "document"), "n_qubits");
    if (n < 1 || n > static_cast<uint64_t>(Circuit::kMaxQubits)) {
        throw ValidationError("n_qubits: must lie in [1, " + std::to_string(Circuit::kMaxQubits) + "]");
    }
    return static_cast<int>(n);
}

double threshold_field(const json &j, const std::string &where) {
    const double t = get_double(j, where);
    if (!(t >= 0.0 && t <= 1.0)) {
        throw ValidationError(where + ": must lie in [0, 1]");
    }
    return t;
}

TestCase parse_case(const json &jc, int n_qubits, const std::string &where) {
    if (!jc.is_object()) {
        throw ValidationError(where + ": expected an object");
    }
    reject_unknown(jc, {"name", "circuit", "assertions"}, where);
    auto name = get_string(require(jc, "name", where), where + ".name");
    auto circuit = json_io::circuit_from_json(require(jc, "circuit", where), n_qubits, where + ".circuit");
    const json &ja = require(jc, "assertions", where);
    if (!ja.is_array()) {
        throw ValidationError(where + ".assertions: expected an array");
    }
    std::vector<AssertionSpec> assertions;
    for (size_t a = 0; a < ja.size(); ++a) {
        const auto awhere = where + ".assertions[" + std::to_string(a) + "]";
        const json &entry = ja[a];
        if (!entry.is_object()) {
            throw ValidationError(awhere + ": expected an object");
        }
        reject_unknown(entry, {"type", "value", "shots", "threshold"}, awhere);
        AssertionSpec spec{json_io::expected_from_json(entry, n_qubits, awhere), std::nullopt, std::nullopt};
        if (auto it = entry.find("shots"); it != entry.end()) {
            spec.shots = get_uint(*it, awhere + ".shots");
        }
        if (auto it = entry.find("threshold"); it != entry.end()) {
            spec.threshold = threshold_field(*it, awhere + ".threshold");
        }
        assertions.push_back(std::move(spec));
    }
    return TestCase{std::move(name), std::move(circuit), std::move(assertions)};
}

}  // namespace

TestSuite parse_suite(std::string_view text) {
    const json doc = parse_document(text, "suite");
    if (!doc.is_object()) {
        throw ValidationError("suite: expected a JSON object");
    }
    reject_unknown(doc, {"name", "n_qubits", "defaults", "cases", "save_data"}, "");

    TestSuite suite;
    suite.name = get_string(require(doc, "name", "suite"), "name");
    suite.n_qubits = qubit_count(doc);
    if (auto it = doc.find("save_data"); it != doc.end()) {
        if (!it->is_boolean()) {
            throw ValidationError("save_data: expected a boolean");
        }
        suite.save_data = it->get<bool>();
    }
    if (auto it = doc.find("defaults"); it != doc.end()) {
        const json &d = *it;
        if (!d.is_object()) {
            throw ValidationError("defaults: expected an object");
        }
        reject_unknown(d, {"shots", "seed", "threshold", "noise"}, "defaults");
        if (auto f = d.find("shots"); f != d.end()) {
            suite.defaults.shots = get_uint(*f, "defaults.shots");
        }
        if (auto f = d.find("seed"); f != d.end()) {
            suite.defaults.seed = get_uint(*f, "defaults.seed");
        }
        if (auto f = d.find("threshold"); f != d.end()) {
            suite.defaults.threshold = threshold_field(*f, "defaults.threshold");
        }
        if (auto f = d.find("noise"); f != d.end()) {
            suite.defaults.noise = noise_field(*f, "defaults.noise");
        }
    }
    const json &cases = require(doc, "cases", "suite");
    if (!cases.is_array()) {
        throw ValidationError("cases: expected an array");
    }
    for (size_t c = 0; c < cases.size(); ++c) {
        suite.cases.push_back(parse_case(cases[c], suite.n_qubits, "cases[" + std::to_string(c) + "]"));
    }
    validate_suite(suite);
    return suite;
}

TestSuite load_suite(const std::filesystem::path &path) {
    return parse_suite(read_file(path));
}

SweepConfig parse_sweep(std::string_view text) {
    const json doc = parse_document(text, "sweep");
    if (!doc.is_object()) {
        throw ValidationError("sweep: expected a JSON object");
    }
    reject_unknown(doc,
                   {"name", "n_qubits", "positive_case", "negative_case", "shot_grid", "trials_per_point", "seed",
                    "threshold", "noise"},
                   "");
    const int n = qubit_count(doc);
    SweepConfig config{.name = get_string(require(doc, "name", "sweep"), "name"),
                       .positive_case = parse_case(require(doc, "positive_case", "sweep"), n, "positive_case"),
                       .negative_case = parse_case(require(doc, "negative_case", "sweep"), n, "negative_case")};
    if (auto it = doc.find("shot_grid"); it != doc.end()) {
        if (!it->is_array()) {
            throw ValidationError("shot_grid: expected an array");
        }
        config.shot_grid.clear();
        for (size_t i = 0; i < it->size(); ++i) {
            config.shot_grid.push_back(get_uint((*it)[i], "shot_grid[" + std::to_string(i) + "]"));
        }
    }
    if (auto it = doc.find("trials_per_point"); it != doc.end()) {
        config.trials_per_point = static_cast<int>(get_uint(*it, "trials_per_point"));
    }
    if (auto it = doc.find("seed"); it != doc.end()) {
        config.seed = get_uint(*it, "seed");
    }
    if (auto it = doc.find("threshold"); it != doc.end()) {
        config.threshold = threshold_field(*it, "threshold");
    }
    if (auto it = doc.find("noise"); it != doc.end()) {
        config.noise = noise_field(*it, "noise");
    }
    validate_sweep(config);
    return config;
}

SweepConfig load_sweep(const std::filesystem::path &path) {
    return parse_sweep(read_file(path));
}

std::optional<NoiseModel> resolve_noise(std::string_view spec) {
    if (spec == "none") {
        return std::nullopt;
    }
    if (spec == "default") {
        return NoiseModel::default_preset();
    }
    const std::string source(spec);
    const json doc = parse_document(read_file(source), source);
    return json_io::noise_from_json(doc, source);
}

}  // namespace qunit
