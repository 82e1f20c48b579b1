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

// Testing protocols behind the polymorphic equality assertion. The kind of
// expected value decides the protocol:
//
//   OutcomeDistribution -> proj          (Pearson chi-squared on counts)
//   DensityMatrix       -> state_tomo    (state fidelity of the estimate)
//   ChoiMatrix          -> process_tomo  (process fidelity of the estimate)
//   ProcessRef          -> process_tomo
//
// Every protocol yields a probability of passing in [0, 1] which is compared
// against a single confidence threshold.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qunit/simulator.hpp"

namespace qunit {

/// Expected channel given as a reference circuit; its Choi matrix is
/// computed once at construction.
class ProcessRef {
   public:
    explicit ProcessRef(Circuit circuit);

    const Circuit &circuit() const {
        return circuit_;
    }
    const ChoiMatrix &choi() const {
        return choi_;
    }

    bool operator==(const ProcessRef &other) const {
        return circuit_ == other.circuit_;
    }

   private:
    Circuit circuit_;
    ChoiMatrix choi_;
};

using ExpectedValue = std::variant<OutcomeDistribution, DensityMatrix, ChoiMatrix, ProcessRef>;

enum class ProtocolId : uint8_t { Proj, StateTomo, ProcessTomo };

std::string_view protocol_name(ProtocolId id);
/// Throws ValidationError on unknown names.
ProtocolId protocol_from_name(std::string_view name);
/// Name of the expected-value kind: distribution, state, process, process_ref.
std::string_view expected_kind(const ExpectedValue &expected);
int expected_qubits(const ExpectedValue &expected);

/// Protocol that handles this kind of expected value.
ProtocolId dispatch(const ExpectedValue &expected);
bool context_check(const ExpectedValue &expected, ProtocolId protocol);

struct RunConfig {
    BackendConfig backend;
    uint64_t shots = 3000;  // per measurement setting for tomography; 0 = analytic
    uint64_t seed = 0;
    double threshold = 0.5;
};

using Diagnostics = std::map<std::string, double>;

struct AssertionResult {
    ProtocolId protocol = ProtocolId::Proj;
    double probability = 0;
    bool passed = false;
    double threshold = 0.5;
    Diagnostics diagnostics;

    bool operator==(const AssertionResult &) const = default;
};

/// Raw data behind a result, kept when a suite asks to save it.
struct Artifacts {
    std::optional<Counts> counts;
    std::optional<CMatrix> reconstructed;

    bool operator==(const Artifacts &) const = default;
};

struct ProtocolRun {
    AssertionResult result;
    Artifacts artifacts;
};

/// Common protocol interface. `run` is the fixed arrange-act-assert sequence:
/// context check, protocol-specific workflow, verdict against the threshold.
class Protocol {
   public:
    virtual ~Protocol() = default;

    virtual ProtocolId id() const = 0;
    virtual bool context_check(const ExpectedValue &expected) const = 0;

    /// Throws ContextError when `expected` does not belong to this protocol.
    /// Numeric failures are rethrown as NumericError prefixed with the
    /// protocol name.
    ProtocolRun run(const Circuit &subject, const ExpectedValue &expected, const RunConfig &config) const;

   protected:
    struct Evaluation {
        double probability;
        Diagnostics diagnostics;
        Artifacts artifacts;
    };
    virtual Evaluation workflow(const Circuit &subject, const ExpectedValue &expected,
                                const RunConfig &config) const = 0;
};

class ProjProtocol final : public Protocol {
   public:
    ProtocolId id() const override {
        return ProtocolId::Proj;
    }
    bool context_check(const ExpectedValue &expected) const override;

   protected:
    Evaluation workflow(const Circuit &subject, const ExpectedValue &expected, const RunConfig &config) const override;
};

class StateTomographyProtocol final : public Protocol {
   public:
    ProtocolId id() const override {
        return ProtocolId::StateTomo;
    }
    bool context_check(const ExpectedValue &expected) const override;

   protected:
    Evaluation workflow(const Circuit &subject, const ExpectedValue &expected, const RunConfig &config) const override;
};

class ProcessTomographyProtocol final : public Protocol {
   public:
    ProtocolId id() const override {
        return ProtocolId::ProcessTomo;
    }
    bool context_check(const ExpectedValue &expected) const override;

   protected:
    Evaluation workflow(const Circuit &subject, const ExpectedValue &expected, const RunConfig &config) const override;
};

const Protocol &protocol_for(ProtocolId id);

/// Run an explicitly chosen protocol.
ProtocolRun run_protocol(ProtocolId id, const Circuit &subject, const ExpectedValue &expected,
                         const RunConfig &config);

/// Polymorphic assertion: the protocol is inferred from the expected value.
AssertionResult run_protocol(const Circuit &subject, const ExpectedValue &expected, const RunConfig &config);

}  // namespace qunit
