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

// JSON encodings of the domain types. Complex entries are [re, im] pairs,
// matrices are arrays of rows, distributions are probability arrays in
// little-endian outcome order. Decoders throw ValidationError whose message
// starts with `where`, a path such as "cases[1].assertions[0].value".

#pragma once

#include <string>

#include "json.hpp"
#include "qunit/protocols.hpp"

namespace qunit::json_io {

using nlohmann::json;

/// Finite numbers as-is; infinities and NaN as the strings "inf", "-inf", "nan".
json number_to_json(double x);
double number_from_json(const json &j, const std::string &where);

json matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const json &j, const std::string &where);

json counts_to_json(const Counts &c);
Counts counts_from_json(const json &j, const std::string &where);

json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const json &j, int n_qubits, const std::string &where);

json noise_to_json(const NoiseModel &noise);
NoiseModel noise_from_json(const json &j, const std::string &where);

/// {"type": distribution|state|process|process_ref, "value": ...}
json expected_to_json(const ExpectedValue &expected);
ExpectedValue expected_from_json(const json &j, int n_qubits, const std::string &where);

/// Typed field access with location-bearing errors.
const json &require(const json &obj, const char *key, const std::string &where);
uint64_t get_uint(const json &j, const std::string &where);
double get_double(const json &j, const std::string &where);
std::string get_string(const json &j, const std::string &where);

}  // namespace qunit::json_io
