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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qunit/qmath.hpp"

namespace qunit {

using Complex = std::complex<double>;
using CMatrix = qmath::ComplexMatrix<double>;
using CVector = Eigen::VectorXcd;

/// Basis index convention throughout: qubit k is bit k of the index
/// (little-endian). For two-qubit gates, qubits[0] is the low bit of the
/// local 4x4 matrix, so cx's control is qubits[0].
enum class GateKind : uint8_t { X, Y, Z, H, S, Sdg, T, Tdg, RX, RY, RZ, CX, CZ, Swap };

std::string_view gate_name(GateKind kind);
/// Throws UnsupportedGateError for anything outside the fixed gate set.
GateKind gate_from_name(std::string_view name);
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

struct GateOp {
    GateKind kind;
    std::vector<int> qubits;
    std::optional<double> angle;

    bool operator==(const GateOp &) const = default;
};

/// Local 2x2 or 4x4 matrix of a gate.
CMatrix gate_matrix(const GateOp &op);

class Circuit {
   public:
    static constexpr int kMaxQubits = 12;

    explicit Circuit(int n_qubits);
    Circuit(int n_qubits, std::vector<GateOp> ops);

    int n_qubits() const {
        return n_qubits_;
    }
    const std::vector<GateOp> &ops() const {
        return ops_;
    }
    bool empty() const {
        return ops_.empty();
    }

    /// Validates arity, angle presence, range and distinctness of qubits.
    Circuit &append(GateOp op);
    Circuit &append(std::string_view name, std::vector<int> qubits, std::optional<double> angle = std::nullopt);

    Circuit &x(int q) { return append({GateKind::X, {q}, {}}); }
    Circuit &y(int q) { return append({GateKind::Y, {q}, {}}); }
    Circuit &z(int q) { return append({GateKind::Z, {q}, {}}); }
    Circuit &h(int q) { return append({GateKind::H, {q}, {}}); }
    Circuit &s(int q) { return append({GateKind::S, {q}, {}}); }
    Circuit &sdg(int q) { return append({GateKind::Sdg, {q}, {}}); }
    Circuit &t(int q) { return append({GateKind::T, {q}, {}}); }
    Circuit &tdg(int q) { return append({GateKind::Tdg, {q}, {}}); }
    Circuit &rx(int q, double theta) { return append({GateKind::RX, {q}, theta}); }
    Circuit &ry(int q, double theta) { return append({GateKind::RY, {q}, theta}); }
    Circuit &rz(int q, double theta) { return append({GateKind::RZ, {q}, theta}); }
    Circuit &cx(int control, int target) { return append({GateKind::CX, {control, target}, {}}); }
    Circuit &cz(int a, int b) { return append({GateKind::CZ, {a, b}, {}}); }
    Circuit &swap(int a, int b) { return append({GateKind::Swap, {a, b}, {}}); }

    /// This circuit followed by `next`. Qubit counts must agree.
    Circuit then(const Circuit &next) const;

    bool operator==(const Circuit &) const = default;

   private:
    int n_qubits_;
    std::vector<GateOp> ops_;
};

/// m <- G m, where G is `local` acting on `qubits` and identity elsewhere.
void apply_left(CMatrix &m, const std::vector<int> &qubits, const CMatrix &local);
/// m <- m G^H.
void apply_right_adjoint(CMatrix &m, const std::vector<int> &qubits, const CMatrix &local);
/// m <- G m G^H.
inline void conjugate_by(CMatrix &m, const std::vector<int> &qubits, const CMatrix &local) {
    apply_left(m, qubits, local);
    apply_right_adjoint(m, qubits, local);
}

/// Product of all gates, later gates multiplying on the left.
CMatrix circuit_to_unitary(const Circuit &c);

}  // namespace qunit
