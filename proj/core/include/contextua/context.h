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

#ifndef CONTEXTUA_CONTEXT_H
#define CONTEXTUA_CONTEXT_H

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "contextua/bitvec.h"
#include "contextua/gf2.h"
#include "contextua/pauli.h"

namespace contextua {

/// Product of the selected members equals (-1)^sign · identity.
struct Relation {
    std::vector<size_t> members;  // indices into ContextGroup::members(), ascending
    bool sign = false;

    bool operator==(const Relation &) const = default;
};

/// `sign` ⊕ Σ over `generators` of the generator values gives the value of the
/// expressed observable under any valuation.
struct Expression {
    std::vector<size_t> generators;  // member indices of independent generators
    bool sign = false;
};

/// Abelian group generated by pairwise commuting observables.
///
/// Members are kept as positive representatives; all sign information sits in
/// the relations. The group itself is generated by the independent members
/// (the first maximal independent subset in member order), and every other
/// member is tied to them by exactly one relation.
class ContextGroup {
   public:
    /// The trivial group on `width` qubits.
    explicit ContextGroup(size_t width = 0);

    /// Closes pairwise commuting Hermitian generators into a context.
    /// Throws NonCommutingGenerators, or MinusIdentityInGroup when a generator
    /// is the negated identity.
    static ContextGroup close(const std::vector<PauliOperator> &generators);

    size_t width() const noexcept {
        return width_;
    }
    const std::vector<PauliOperator> &members() const noexcept {
        return members_;
    }
    const std::vector<Relation> &relations() const noexcept {
        return relations_;
    }
    const std::vector<size_t> &independent() const noexcept {
        return independent_;
    }
    size_t rank() const noexcept {
        return independent_.size();
    }

    std::optional<size_t> index_of(const PauliOperator &observable) const;
    /// Whether ±observable lies in the group.
    bool contains(const PauliOperator &observable) const;
    std::optional<Expression> express(const PauliOperator &observable) const;
    bool is_subgroup_of(const ContextGroup &other) const;
    /// Canonical symplectic basis; equal iff the groups coincide projectively.
    std::vector<BitVec> span_basis() const;

   private:
    size_t width_;
    std::vector<PauliOperator> members_;
    std::vector<Relation> relations_;
    std::vector<size_t> independent_;
    gf2::IncrementalBasis basis_;
};

ContextGroup close_context(const std::vector<PauliOperator> &generators);

/// Positive representatives with duplicates removed, first occurrence kept.
/// Throws WidthMismatch or NonHermitian.
std::vector<PauliOperator> canonical_observables(const std::vector<PauliOperator> &observables);

/// adjacency[i] has bit j set iff observables i and j commute (i != j).
struct CommutationGraph {
    std::vector<BitVec> adjacency;

    size_t size() const noexcept {
        return adjacency.size();
    }
    bool edge(size_t i, size_t j) const {
        return adjacency.at(i).get(j);
    }
};

CommutationGraph commutation_graph(const std::vector<PauliOperator> &observables);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted ascending,
/// listed in lexicographic order.
std::vector<std::vector<size_t>> maximal_cliques(const CommutationGraph &graph);

/// One context per maximal clique of the commutation graph, members sorted by
/// observable order, contexts sorted lexicographically by their member lists.
std::vector<ContextGroup> maximal_contexts(const std::vector<PauliOperator> &observables);

struct ContextPoset {
    std::vector<ContextGroup> nodes;
    /// The first `maximal_count` nodes are the input contexts.
    size_t maximal_count = 0;
    /// (i, j) means nodes[i] ⊆ nodes[j]; includes (i, i).
    std::vector<std::pair<size_t, size_t>> order;

    bool leq(size_t i, size_t j) const;
};

/// Input contexts plus pairwise intersections iterated to a fixpoint.
ContextPoset build_poset(const std::vector<ContextGroup> &maximal);

/// Group intersection; members are the positive operators of the canonical
/// basis of the intersected symplectic spans.
ContextGroup intersect(const ContextGroup &a, const ContextGroup &b);

}  // namespace contextua

#endif
