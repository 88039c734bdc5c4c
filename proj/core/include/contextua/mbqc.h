// Copyright 2026 The Contextua Authors
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

#ifndef CONTEXTUA_MBQC_H
#define CONTEXTUA_MBQC_H

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contextua/context.h"
#include "contextua/gf2.h"
#include "contextua/pauli.h"
#include "contextua/presheaf.h"
#include "contextua/stabilizer.h"

namespace contextua::mbqc {

/// Unvalidated instance data as read from an instance file.
struct RawInstance {
    size_t parties = 0;
    size_t input_bits = 0;
    std::vector<BitVec> q_rows;
    /// observables[setting][party], each a signed Pauli string: either one
    /// letter or a full-width string supported on the party's qubit.
    std::array<std::vector<std::string>, 2> observables;
    std::vector<std::string> resource;
};

/// An l2-MBQC: party k measures observables[q_k][k] on qubit k, with the
/// settings q = Q·i chosen from the classical input i; the output is the
/// parity of all outcomes.
struct Instance {
    size_t parties = 0;
    size_t input_bits = 0;
    gf2::BitMatrix q;
    std::array<std::vector<PauliOperator>, 2> observables;
    StabilizerGroup resource;

    const PauliOperator &observable(size_t party, bool setting) const {
        return observables[setting ? 1 : 0].at(party);
    }
};

/// Throws NonLocalObservable, ShapeMismatch or InvalidResource (which also
/// covers resources that are not a full stabilizer state).
Instance validate_instance(const RawInstance &raw);

struct Joint {
    BitVec settings;            // q = Q·i
    PauliOperator observable;   // ⊗_k O_k(q_k), signed
    ContextGroup context;       // closure of {O_k(q_k)} ∪ {joint}
};

BitVec settings_for(const Instance &inst, const BitVec &input);
Joint joint_observable(const Instance &inst, const BitVec &input);

/// Output bit, or nullopt when the joint observable is not in ±resource.
std::optional<bool> run(const Instance &inst, const BitVec &input);

/// Table indices whose output is indeterminate, ascending.
std::vector<size_t> indeterminate_inputs(const Instance &inst);

/// Throws IndeterminateInputs listing the offending inputs.
gf2::TruthTable truth_table(const Instance &inst);

struct MbqcContexts {
    /// One local context per distinct setting vector in the image of Q, in
    /// order of first appearance over inputs, followed by the special context.
    std::vector<ContextGroup> contexts;
    std::vector<BitVec> settings;
    /// Eigenvalue pins for every member of the special context.
    std::vector<StateConstraint> pins;
};

/// Throws SpecialContextNotStabilizing if some joint observable is outside
/// ±resource.
MbqcContexts mbqc_contexts(const Instance &inst);

/// o(i) = Σ_k s_k((Q·i)_k) with outcome bits read off a global section.
struct LinearOutputMap {
    gf2::AffineForm form;
    std::vector<bool> outcome0;  // s_k(0)
    std::vector<bool> outcome1;  // s_k(1)
};

/// Throws VerificationFailed if the map disagrees with the truth table.
LinearOutputMap linear_output_map(const GlobalSection &section, const Instance &inst);

struct ContextualityReport {
    GlobalProblem problem;
    GlobalResult global;
    std::optional<gf2::TruthTable> table;
    std::vector<size_t> indeterminate;
    std::optional<gf2::AffineForm> affine;
    std::optional<LinearOutputMap> linear_map;
    /// False only if a global section exists and the table is not affine.
    bool theorem_consistent = true;

    bool contextual() const {
        return std::holds_alternative<gf2::Certificate>(global);
    }
};

/// Indeterminate inputs are reported rather than thrown; the special context
/// then covers only the determinate joint observables.
ContextualityReport contextuality_report(const Instance &inst);

}  // namespace contextua::mbqc

#endif
