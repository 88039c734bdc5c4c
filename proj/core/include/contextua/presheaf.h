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

#ifndef CONTEXTUA_PRESHEAF_H
#define CONTEXTUA_PRESHEAF_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "contextua/context.h"
#include "contextua/gf2.h"
#include "contextua/pauli.h"

namespace contextua {

/// Observable → bit a, meaning the observable takes the value (-1)^a.
using Assignment = std::map<PauliOperator, bool>;

/// A point of the spectrum of one context: a multiplicative ±1 assignment.
struct Valuation {
    std::shared_ptr<const ContextGroup> context;
    Assignment values;
};

/// Pins the value of a positive observable to (-1)^bit.
struct StateConstraint {
    PauliOperator observable;
    bool bit = false;

    /// Constraint that the signed observable `p` has eigenvalue (-1)^eigen_bit.
    static StateConstraint from_signed(const PauliOperator &p, bool eigen_bit);
    bool operator==(const StateConstraint &) const = default;
};

/// Whether `values` (which must cover every member) obeys every relation.
bool is_valuation(const ContextGroup &context, const Assignment &values);

/// All 2^rank valuations, enumerated by binary counting over the independent
/// generators (the first independent member is the least significant bit).
/// Throws EmptySpectrum if the context has no valuation, TooLarge above rank 24.
std::vector<Valuation> spectrum(const ContextGroup &context);

/// Throws NotASubcontext unless `sub` is a subgroup of v.context.
Valuation restrict(const Valuation &v, const ContextGroup &sub);

struct RowOrigin {
    enum class Kind { Relation, Pin };
    Kind kind = Kind::Relation;
    size_t context = 0;   // context index (Relation rows)
    size_t relation = 0;  // relation index within the context, or constraint index for Pin rows

    bool operator==(const RowOrigin &) const = default;
};

/// The linear system whose solutions are the global sections.
struct GlobalProblem {
    std::vector<ContextGroup> contexts;
    std::vector<StateConstraint> constraints;
    /// One unknown per positive observable, in order of first appearance.
    std::vector<PauliOperator> variables;
    std::vector<RowOrigin> origins;
    gf2::Gf2System system;

    size_t variable_index(const PauliOperator &observable) const;
};

struct GlobalSection {
    Assignment values;
    size_t solution_dimension = 0;
};

using GlobalResult = std::variant<GlobalSection, gf2::Certificate>;

/// Relation rows of every context in order, then one pinned row per constraint.
/// Throws UnknownConstrainedObservable, WidthMismatch.
GlobalProblem build_global_problem(std::vector<ContextGroup> contexts, std::vector<StateConstraint> constraints);

GlobalResult solve_global(const GlobalProblem &problem);

/// Whether `section` restricts to a valuation on every context and honours
/// every pinned constraint.
bool is_global_section(const GlobalProblem &problem, const Assignment &section);

struct BruteForceResult {
    std::optional<GlobalSection> section;
    uint64_t candidates = 0;
};

/// Exhaustive search over all 2^v assignments in binary order (variable 0 is
/// the least significant bit); returns the first satisfying one. Throws
/// TooLarge above 20 variables.
BruteForceResult brute_force_global(const std::vector<ContextGroup> &contexts,
                                    const std::vector<StateConstraint> &constraints);

}  // namespace contextua

#endif
