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

#include "qunit/circuit.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qunit/errors.hpp"

namespace qunit {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    int arity;
    bool has_angle;
};

constexpr std::array<GateInfo, 14> kGates{{
    {GateKind::X, "x", 1, false},
    {GateKind::Y, "y", 1, false},
    {GateKind::Z, "z", 1, false},
    {GateKind::H, "h", 1, false},
    {GateKind::S, "s", 1, false},
    {GateKind::Sdg, "sdg", 1, false},
    {GateKind::T, "t", 1, false},
    {GateKind::Tdg, "tdg", 1, false},
    {GateKind::RX, "rx", 1, true},
    {GateKind::RY, "ry", 1, true},
    {GateKind::RZ, "rz", 1, true},
    {GateKind::CX, "cx", 2, false},
    {GateKind::CZ, "cz", 2, false},
    {GateKind::Swap, "swap", 2, false},
}};

const GateInfo &info(GateKind kind) {
    return kGates[static_cast<size_t>(kind)];
}

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

// Applies `local` to the sub-vector picked out by `qubits` at every base
// index, for each of `lines` columns (left action) or rows (right action).
template <bool Left>
void apply_local(CMatrix &m, const std::vector<int> &qubits, const CMatrix &local) {
    const Eigen::Index dim = m.rows();
    const size_t k = qubits.size();
    const Eigen::Index local_dim = Eigen::Index{1} << k;
    if (local.rows() != local_dim || local.cols() != local_dim) {
        throw DimensionError("local operator size does not match qubit count");
    }
    uint64_t qmask = 0;
    for (int q : qubits) {
        if (q < 0 || (Eigen::Index{1} << q) >= dim) {
            throw IndexError("qubit " + std::to_string(q) + " out of range for matrix of dimension " +
                             std::to_string(dim));
        }
        qmask |= uint64_t{1} << q;
    }
    std::vector<Eigen::Index> offsets(static_cast<size_t>(local_dim));
    for (Eigen::Index l = 0; l < local_dim; ++l) {
        uint64_t off = 0;
        for (size_t b = 0; b < k; ++b) {
            off |= ((static_cast<uint64_t>(l) >> b) & 1u) << qubits[b];
        }
        offsets[static_cast<size_t>(l)] = static_cast<Eigen::Index>(off);
    }

    CVector buf(local_dim);
    for (Eigen::Index base = 0; base < dim; ++base) {
        if (static_cast<uint64_t>(base) & qmask) {
            continue;
        }
        for (Eigen::Index line = 0; line < dim; ++line) {
            for (Eigen::Index l = 0; l < local_dim; ++l) {
                buf[l] = Left ? m(base + offsets[l], line) : m(line, base + offsets[l]);
            }
            for (Eigen::Index r = 0; r < local_dim; ++r) {
                Complex acc = 0;
                for (Eigen::Index l = 0; l < local_dim; ++l) {
                    acc += Left ? local(r, l) * buf[l] : buf[l] * std::conj(local(r, l));
                }
                if (Left) {
                    m(base + offsets[r], line) = acc;
                } else {
                    m(line, base + offsets[r]) = acc;
                }
            }
        }
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    return info(kind).name;
}

GateKind gate_from_name(std::string_view name) {
    for (const auto &g : kGates) {
        if (g.name == name) {
            return g.kind;
        }
    }
    throw UnsupportedGateError("unsupported gate '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) {
    return info(kind).arity;
}

bool gate_has_angle(GateKind kind) {
    return info(kind).has_angle;
}

CMatrix gate_matrix(const GateOp &op) {
    using std::numbers::sqrt2;
    const Complex i{0, 1};
    const double theta = op.angle.value_or(0.0);
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    switch (op.kind) {
        case GateKind::X:
            return mat2(0, 1, 1, 0);
        case GateKind::Y:
            return mat2(0, -i, i, 0);
        case GateKind::Z:
            return mat2(1, 0, 0, -1);
        case GateKind::H:
            return mat2(1, 1, 1, -1) / sqrt2;
        case GateKind::S:
            return mat2(1, 0, 0, i);
        case GateKind::Sdg:
            return mat2(1, 0, 0, -i);
        case GateKind::T:
            return mat2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
        case GateKind::Tdg:
            return mat2(1, 0, 0, std::polar(1.0, -std::numbers::pi / 4));
        case GateKind::RX:
            return mat2(c, -i * s, -i * s, c);
        case GateKind::RY:
            return mat2(c, -s, s, c);
        case GateKind::RZ:
            return mat2(std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2));
        case GateKind::CX: {
            // local index = control + 2 * target
            CMatrix m = CMatrix::Zero(4, 4);
            m(0, 0) = m(2, 2) = 1;
            m(3, 1) = m(1, 3) = 1;
            return m;
        }
        case GateKind::CZ: {
            CMatrix m = CMatrix::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        }
        case GateKind::Swap: {
            CMatrix m = CMatrix::Zero(4, 4);
            m(0, 0) = m(3, 3) = 1;
            m(1, 2) = m(2, 1) = 1;
            return m;
        }
    }
    throw UnsupportedGateError("unsupported gate");
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DimensionError("circuit qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                             std::to_string(n_qubits));
    }
}

Circuit::Circuit(int n_qubits, std::vector<GateOp> ops) : Circuit(n_qubits) {
    ops_.reserve(ops.size());
    for (auto &op : ops) {
        append(std::move(op));
    }
}

Circuit &Circuit::append(GateOp op) {
    const auto name = std::string(gate_name(op.kind));
    if (static_cast<int>(op.qubits.size()) != gate_arity(op.kind)) {
        throw IndexError("gate '" + name + "' takes " + std::to_string(gate_arity(op.kind)) + " qubit(s), got " +
                         std::to_string(op.qubits.size()));
    }
    if (gate_has_angle(op.kind) != op.angle.has_value()) {
        throw UnsupportedGateError(gate_has_angle(op.kind) ? "gate '" + name + "' requires an angle"
                                                           : "gate '" + name + "' does not take an angle");
    }
    if (op.angle && !std::isfinite(*op.angle)) {
        throw NumericError("gate '" + name + "' has a non-finite angle");
    }
    for (size_t k = 0; k < op.qubits.size(); ++k) {
        const int q = op.qubits[k];
        if (q < 0 || q >= n_qubits_) {
            throw IndexError("gate '" + name + "': qubit " + std::to_string(q) + " out of range for " +
                             std::to_string(n_qubits_) + "-qubit circuit");
        }
        for (size_t j = 0; j < k; ++j) {
            if (op.qubits[j] == q) {
                throw IndexError("gate '" + name + "': repeated qubit " + std::to_string(q));
            }
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::append(std::string_view name, std::vector<int> qubits, std::optional<double> angle) {
    return append(GateOp{gate_from_name(name), std::move(qubits), angle});
}

Circuit Circuit::then(const Circuit &next) const {
    if (next.n_qubits_ != n_qubits_) {
        throw DimensionError("cannot compose a " + std::to_string(n_qubits_) + "-qubit circuit with a " +
                             std::to_string(next.n_qubits_) + "-qubit circuit");
    }
    Circuit out = *this;
    out.ops_.insert(out.ops_.end(), next.ops_.begin(), next.ops_.end());
    return out;
}

void apply_left(CMatrix &m, const std::vector<int> &qubits, const CMatrix &local) {
    apply_local<true>(m, qubits, local);
}

void apply_right_adjoint(CMatrix &m, const std::vector<int> &qubits, const CMatrix &local) {
    apply_local<false>(m, qubits, local);
}

CMatrix circuit_to_unitary(const Circuit &c) {
    const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
    CMatrix u = CMatrix::Identity(dim, dim);
    for (const auto &op : c.ops()) {
        apply_left(u, op.qubits, gate_matrix(op));
    }
    return u;
}

}  // namespace qunit
