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

#include "qunit/protocols.hpp"

#include <algorithm>
#include <cmath>

#include "qunit/errors.hpp"
#include "qunit/stats.hpp"
#include "qunit/tomography.hpp"

namespace qunit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_same_size(const Circuit &subject, const ExpectedValue &expected) {
    if (expected_qubits(expected) != subject.n_qubits()) {
        throw DimensionError("expected " + std::string(expected_kind(expected)) + " is on " +
                             std::to_string(expected_qubits(expected)) + " qubit(s) but the subject has " +
                             std::to_string(subject.n_qubits()));
    }
}

double pow_u(double base, int n) {
    return std::pow(base, n);
}

}  // namespace

ProcessRef::ProcessRef(Circuit circuit) : circuit_(std::move(circuit)), choi_(circuit_to_choi(circuit_)) {
}

std::string_view protocol_name(ProtocolId id) {
    switch (id) {
        case ProtocolId::Proj:
            return "proj";
        case ProtocolId::StateTomo:
            return "state_tomo";
        case ProtocolId::ProcessTomo:
            return "process_tomo";
    }
    return "unknown";
}

ProtocolId protocol_from_name(std::string_view name) {
    for (auto id : {ProtocolId::Proj, ProtocolId::StateTomo, ProtocolId::ProcessTomo}) {
        if (protocol_name(id) == name) {
            return id;
        }
    }
    throw ValidationError("unknown protocol '" + std::string(name) + "'");
}

std::string_view expected_kind(const ExpectedValue &expected) {
    return std::visit(overloaded{
                          [](const OutcomeDistribution &) { return std::string_view("distribution"); },
                          [](const DensityMatrix &) { return std::string_view("state"); },
                          [](const ChoiMatrix &) { return std::string_view("process"); },
                          [](const ProcessRef &) { return std::string_view("process_ref"); },
                      },
                      expected);
}

int expected_qubits(const ExpectedValue &expected) {
    return std::visit(overloaded{
                          [](const ProcessRef &p) { return p.circuit().n_qubits(); },
                          [](const auto &v) { return v.n_qubits(); },
                      },
                      expected);
}

ProtocolId dispatch(const ExpectedValue &expected) {
    return std::visit(overloaded{
                          [](const OutcomeDistribution &) { return ProtocolId::Proj; },
                          [](const DensityMatrix &) { return ProtocolId::StateTomo; },
                          [](const ChoiMatrix &) { return ProtocolId::ProcessTomo; },
                          [](const ProcessRef &) { return ProtocolId::ProcessTomo; },
                      },
                      expected);
}

bool context_check(const ExpectedValue &expected, ProtocolId protocol) {
    return dispatch(expected) == protocol;
}

ProtocolRun Protocol::run(const Circuit &subject, const ExpectedValue &expected, const RunConfig &config) const {
    if (!context_check(expected)) {
        throw ContextError("expected value of kind '" + std::string(expected_kind(expected)) +
                           "' does not match protocol '" + std::string(protocol_name(id())) + "'");
    }
    require_same_size(subject, expected);
    if (!(config.threshold >= 0.0 && config.threshold <= 1.0)) {
        throw ValidationError("threshold must lie in [0, 1]");
    }

    Evaluation eval;
    try {
        eval = workflow(subject, expected, config);
    } catch (const NumericError &e) {
        throw NumericError("[" + std::string(protocol_name(id())) + "] " + e.what());
    }

    ProtocolRun out;
    out.result.protocol = id();
    out.result.probability = std::clamp(eval.probability, 0.0, 1.0);
    out.result.threshold = config.threshold;
    out.result.passed = out.result.probability >= config.threshold;
    out.result.diagnostics = std::move(eval.diagnostics);
    out.artifacts = std::move(eval.artifacts);
    return out;
}

bool ProjProtocol::context_check(const ExpectedValue &expected) const {
    return qunit::context_check(expected, id());
}

Protocol::Evaluation ProjProtocol::workflow(const Circuit &subject, const ExpectedValue &expected,
                                            const RunConfig &config) const {
    if (config.shots < 1) {
        throw ValidationError("the proj protocol needs at least one shot");
    }
    const auto &dist = std::get<OutcomeDistribution>(expected);
    const auto &noise = config.backend.noise;
    const DensityMatrix out = evolve(DensityMatrix::zero_state(subject.n_qubits()), subject, noise);
    Counts counts = sample(out, std::nullopt, config.shots, config.seed, noise);
    const Chi2Result chi2 = chi2_gof(counts, dist);

    Evaluation eval;
    eval.probability = chi2.p_value;
    eval.diagnostics = {{"chi2_statistic", chi2.statistic},
                        {"chi2_dof", static_cast<double>(chi2.dof)},
                        {"settings", 1},
                        {"shots", static_cast<double>(config.shots)},
                        {"total_shots", static_cast<double>(config.shots)}};
    eval.artifacts.counts = std::move(counts);
    return eval;
}

bool StateTomographyProtocol::context_check(const ExpectedValue &expected) const {
    return qunit::context_check(expected, id());
}

Protocol::Evaluation StateTomographyProtocol::workflow(const Circuit &subject, const ExpectedValue &expected,
                                                       const RunConfig &config) const {
    const auto &target = std::get<DensityMatrix>(expected);
    const int n = subject.n_qubits();
    const DensityMatrix estimate = state_tomography(Circuit(n), subject, config.backend, config.shots, config.seed);
    const double settings = pow_u(3, n);

    Evaluation eval;
    eval.probability = state_fidelity(estimate, target);
    eval.diagnostics = {{"settings", settings},
                        {"shots", static_cast<double>(config.shots)},
                        {"total_shots", settings * static_cast<double>(config.shots)},
                        {"estimate_purity", estimate.purity()}};
    eval.artifacts.reconstructed = estimate.matrix();
    return eval;
}

bool ProcessTomographyProtocol::context_check(const ExpectedValue &expected) const {
    return qunit::context_check(expected, id());
}

Protocol::Evaluation ProcessTomographyProtocol::workflow(const Circuit &subject, const ExpectedValue &expected,
                                                         const RunConfig &config) const {
    const ChoiMatrix &target = std::holds_alternative<ProcessRef>(expected) ? std::get<ProcessRef>(expected).choi()
                                                                            : std::get<ChoiMatrix>(expected);
    const int n = subject.n_qubits();
    const ChoiMatrix estimate = process_tomography(subject, config.backend, config.shots, config.seed);
    const double settings = pow_u(4, n) * pow_u(3, n);
    const double dim = pow_u(2, n);
    const CMatrix normalized = estimate.matrix() / dim;

    Evaluation eval;
    eval.probability = process_fidelity(estimate, target);
    eval.diagnostics = {{"settings", settings},
                        {"shots", static_cast<double>(config.shots)},
                        {"total_shots", settings * static_cast<double>(config.shots)},
                        {"estimate_purity", (normalized * normalized).trace().real()}};
    eval.artifacts.reconstructed = estimate.matrix();
    return eval;
}

const Protocol &protocol_for(ProtocolId id) {
    static const ProjProtocol proj;
    static const StateTomographyProtocol state;
    static const ProcessTomographyProtocol process;
    switch (id) {
        case ProtocolId::Proj:
            return proj;
        case ProtocolId::StateTomo:
            return state;
        case ProtocolId::ProcessTomo:
            return process;
    }
    throw ValidationError("unknown protocol id");
}

ProtocolRun run_protocol(ProtocolId id, const Circuit &subject, const ExpectedValue &expected,
                         const RunConfig &config) {
    return protocol_for(id).run(subject, expected, config);
}

AssertionResult run_protocol(const Circuit &subject, const ExpectedValue &expected, const RunConfig &config) {
    return run_protocol(dispatch(expected), subject, expected, config).result;
}

}  // namespace qunit
