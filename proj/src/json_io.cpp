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

#include "qunit/json_io.hpp"

#include <cmath>
#include <limits>

#include "qunit/errors.hpp"

namespace qunit::json_io {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw ValidationError(where + ": " + what);
}

// Runs a domain constructor, turning its errors into located validation errors.
template <typename F>
auto located(const std::string &where, F &&make) {
    try {
        return make();
    } catch (const ValidationError &) {
        throw;
    } catch (const Error &e) {
        fail(where, e.what());
    }
}

}  // namespace

const json &require(const json &obj, const char *key, const std::string &where) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

uint64_t get_uint(const json &j, const std::string &where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<int64_t>() >= 0)) {
        fail(where, "expected a non-negative integer");
    }
    return j.get<uint64_t>();
}

double get_double(const json &j, const std::string &where) {
    if (!j.is_number()) {
        fail(where, "expected a number");
    }
    return j.get<double>();
}

std::string get_string(const json &j, const std::string &where) {
    if (!j.is_string()) {
        fail(where, "expected a string");
    }
    return j.get<std::string>();
}

json number_to_json(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return x;
}

double number_from_json(const json &j, const std::string &where) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
        fail(where, "unrecognized number '" + s + "'");
    }
    return get_double(j, where);
}

json matrix_to_json(const CMatrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        fail(where, "expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto row_where = where + "[" + std::to_string(i) + "]";
        const json &row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols || cols == 0) {
            fail(row_where, "expected a row of " + std::to_string(cols) + " entries");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto entry_where = row_where + "[" + std::to_string(k) + "]";
            const json &e = row[static_cast<size_t>(k)];
            if (!e.is_array() || e.size() != 2) {
                fail(entry_where, "expected a [re, im] pair");
            }
            m(i, k) = Complex(get_double(e[0], entry_where + "[0]"), get_double(e[1], entry_where + "[1]"));
        }
    }
    return m;
}

json counts_to_json(const Counts &c) {
    json tallies = json::object();
    for (const auto &[outcome, count] : c.tallies) {
        tallies[std::to_string(outcome)] = count;
    }
    return {{"n_qubits", c.n_qubits}, {"shots", c.shots}, {"tallies", tallies}};
}

Counts counts_from_json(const json &j, const std::string &where) {
    Counts c;
    c.n_qubits = static_cast<int>(get_uint(require(j, "n_qubits", where), where + ".n_qubits"));
    c.shots = get_uint(require(j, "shots", where), where + ".shots");
    const json &tallies = require(j, "tallies", where);
    if (!tallies.is_object()) {
        fail(where + ".tallies", "expected an object");
    }
    for (const auto &[key, value] : tallies.items()) {
        uint64_t outcome = 0;
        try {
            outcome = std::stoull(key);
        } catch (const std::exception &) {
            fail(where + ".tallies", "outcome key '" + key + "' is not an integer");
        }
        c.tallies[outcome] = get_uint(value, where + ".tallies." + key);
    }
    return c;
}

json circuit_to_json(const Circuit &c) {
    json ops = json::array();
    for (const auto &op : c.ops()) {
        json o = {{"gate", std::string(gate_name(op.kind))}, {"qubits", op.qubits}};
        if (op.angle) {
            o["angle"] = *op.angle;
        }
        ops.push_back(std::move(o));
    }
    return ops;
}

Circuit circuit_from_json(const json &j, int n_qubits, const std::string &where) {
    if (!j.is_array()) {
        fail(where, "expected an array of gate operations");
    }
    Circuit c = located(where, [&] { return Circuit(n_qubits); });
    for (size_t k = 0; k < j.size(); ++k) {
        const auto op_where = where + "[" + std::to_string(k) + "]";
        const json &o = j[k];
        const auto name = get_string(require(o, "gate", op_where), op_where + ".gate");
        const json &qs = require(o, "qubits", op_where);
        if (!qs.is_array()) {
            fail(op_where + ".qubits", "expected an array of qubit indices");
        }
        std::vector<int> qubits;
        for (size_t i = 0; i < qs.size(); ++i) {
            if (!qs[i].is_number_integer()) {
                fail(op_where + ".qubits[" + std::to_string(i) + "]", "expected an integer");
            }
            qubits.push_back(qs[i].get<int>());
        }
        std::optional<double> angle;
        if (auto it = o.find("angle"); it != o.end() && !it->is_null()) {
            angle = get_double(*it, op_where + ".angle");
        }
        located(op_where, [&] { return c.append(name, std::move(qubits), angle), 0; });
    }
    return c;
}

json noise_to_json(const NoiseModel &noise) {
    return {{"depolarizing_1q", noise.depolarizing_1q},
            {"depolarizing_2q", noise.depolarizing_2q},
            {"amplitude_damping", noise.amplitude_damping},
            {"readout_flip", noise.readout_flip}};
}

NoiseModel noise_from_json(const json &j, const std::string &where) {
    if (!j.is_object()) {
        fail(where, "expected a noise object");
    }
    NoiseModel noise;
    for (const auto &[key, value] : j.items()) {
        const auto field_where = where + "." + key;
        if (key == "depolarizing_1q") {
            noise.depolarizing_1q = get_double(value, field_where);
        } else if (key == "depolarizing_2q") {
            noise.depolarizing_2q = get_double(value, field_where);
        } else if (key == "amplitude_damping") {
            noise.amplitude_damping = get_double(value, field_where);
        } else if (key == "readout_flip") {
            noise.readout_flip = get_double(value, field_where);
        } else {
            fail(field_where, "unknown noise parameter");
        }
    }
    located(where, [&] { return noise.validate(), 0; });
    return noise;
}

json expected_to_json(const ExpectedValue &expected) {
    json out = {{"type", std::string(expected_kind(expected))}};
    if (const auto *d = std::get_if<OutcomeDistribution>(&expected)) {
        out["value"] = d->probs();
    } else if (const auto *s = std::get_if<DensityMatrix>(&expected)) {
        out["value"] = matrix_to_json(s->matrix());
    } else if (const auto *p = std::get_if<ChoiMatrix>(&expected)) {
        out["value"] = matrix_to_json(p->matrix());
    } else {
        out["value"] = circuit_to_json(std::get<ProcessRef>(expected).circuit());
    }
    return out;
}

ExpectedValue expected_from_json(const json &j, int n_qubits, const std::string &where) {
    const auto type = get_string(require(j, "type", where), where + ".type");
    const json &value = require(j, "value", where);
    const auto value_where = where + ".value";
    const auto check_qubits = [&](int got) {
        if (got != n_qubits) {
            fail(value_where, "describes " + std::to_string(got) + " qubit(s), expected " + std::to_string(n_qubits));
        }
    };
    if (type == "distribution") {
        if (!value.is_array()) {
            fail(value_where, "expected an array of probabilities");
        }
        std::vector<double> probs;
        for (size_t i = 0; i < value.size(); ++i) {
            probs.push_back(get_double(value[i], value_where + "[" + std::to_string(i) + "]"));
        }
        auto d = located(value_where, [&] { return OutcomeDistribution(std::move(probs)); });
        check_qubits(d.n_qubits());
        return d;
    }
    if (type == "state") {
        auto s = located(value_where, [&] { return DensityMatrix(matrix_from_json(value, value_where)); });
        check_qubits(s.n_qubits());
        return s;
    }
    if (type == "process") {
        auto p = located(value_where, [&] { return ChoiMatrix(matrix_from_json(value, value_where)); });
        check_qubits(p.n_qubits());
        return p;
    }
    if (type == "process_ref") {
        return located(value_where, [&] { return ProcessRef(circuit_from_json(value, n_qubits, value_where)); });
    }
    fail(where + ".type", "unknown assertion type '" + type + "'");
}

}  // namespace qunit::json_io
