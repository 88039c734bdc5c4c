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

#include "contextua/context.h"

#include <algorithm>
#include <functional>

#include "contextua/error.h"

namespace contextua {

namespace {

PauliOperator positive_from_symplectic(const BitVec &v, size_t width) {
    PauliOperator p(v.slice(0, width), v.slice(width, 2 * width), 0);
    return PauliOperator(p.x_bits(), p.z_bits(), static_cast<uint8_t>(p.y_count() & 3));
}

}  // namespace

ContextGroup::ContextGroup(size_t width) : width_(width), basis_(2 * width) {
}

std::vector<PauliOperator> canonical_observables(const std::vector<PauliOperator> &observables) {
    std::vector<PauliOperator> result;
    for (const auto &p : observables) {
        if (!result.empty() && p.width() != result.front().width()) {
            throw Error(ErrorKind::WidthMismatch, "observables act on different numbers of qubits");
        }
        if (!p.is_hermitian()) {
            throw Error(ErrorKind::NonHermitian, "observables must be Hermitian");
        }
        auto pos = p.positive();
        if (std::find(result.begin(), result.end(), pos) == result.end()) {
            result.push_back(std::move(pos));
        }
    }
    return result;
}

ContextGroup ContextGroup::close(const std::vector<PauliOperator> &generators) {
    if (generators.empty()) {
        return ContextGroup(0);
    }
    for (const auto &g : generators) {
        if (g.is_hermitian() && g.is_scalar() && g.sign_bit()) {
            throw Error(ErrorKind::MinusIdentityInGroup, "context contains " + g.str());
        }
    }
    auto members = canonical_observables(generators);
    for (size_t i = 0; i < members.size(); i++) {
        for (size_t j = i + 1; j < members.size(); j++) {
            if (!commutes(members[i], members[j])) {
                throw Error(ErrorKind::NonCommutingGenerators, members[i].str() + " and " + members[j].str() +
                                                                   " anticommute");
            }
        }
    }

    ContextGroup group(members.front().width());
    std::vector<BitVec> rows;
    for (size_t k = 0; k < members.size(); k++) {
        auto v = members[k].symplectic();
        if (group.basis_.add(v)) {
            group.independent_.push_back(k);
        }
        rows.push_back(std::move(v));
    }

    for (const auto &y : gf2::left_nullspace(gf2::BitMatrix::from_rows(rows, 2 * group.width_))) {
        Relation rel;
        PauliOperator product(group.width_);
        for (size_t k : y.set_indices()) {
            rel.members.push_back(k);
            product = product * members[k];
        }
        // Commuting Hermitian factors with cancelling symplectic parts multiply to ±I.
        rel.sign = product.sign_bit();
        group.relations_.push_back(std::move(rel));
    }
    group.members_ = std::move(members);
    return group;
}

ContextGroup close_context(const std::vector<PauliOperator> &generators) {
    return ContextGroup::close(generators);
}

std::optional<size_t> ContextGroup::index_of(const PauliOperator &observable) const {
    auto it = std::find(members_.begin(), members_.end(), observable);
    if (it == members_.end()) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - members_.begin());
}

std::optional<Expression> ContextGroup::express(const PauliOperator &observable) const {
    if (observable.width() != width_) {
        throw Error(ErrorKind::WidthMismatch, "observable width differs from context width");
    }
    auto coefficients = basis_.decompose(observable.symplectic());
    if (!coefficients) {
        return std::nullopt;
    }
    Expression expr;
    PauliOperator product(width_);
    for (size_t g : coefficients->set_indices()) {
        expr.generators.push_back(independent_[g]);
        product = product * members_[independent_[g]];
    }
    expr.sign = observable.sign_bit() != product.sign_bit();
    return expr;
}

bool ContextGroup::contains(const PauliOperator &observable) const {
    return express(observable).has_value();
}

bool ContextGroup::is_subgroup_of(const ContextGroup &other) const {
    if (other.width_ != width_) {
        return false;
    }
    return std::all_of(independent_.begin(), independent_.end(),
                       [&](size_t k) { return other.contains(members_[k]); });
}

std::vector<BitVec> ContextGroup::span_basis() const {
    std::vector<BitVec> vectors;
    for (size_t k : independent_) {
        vectors.push_back(members_[k].symplectic());
    }
    return gf2::canonical_basis(vectors, 2 * width_);
}

CommutationGraph commutation_graph(const std::vector<PauliOperator> &observables) {
    CommutationGraph graph;
    graph.adjacency.assign(observables.size(), BitVec(observables.size()));
    for (size_t i = 0; i < observables.size(); i++) {
        for (size_t j = i + 1; j < observables.size(); j++) {
            if (commutes(observables[i], observables[j])) {
                graph.adjacency[i].set(j, true);
                graph.adjacency[j].set(i, true);
            }
        }
    }
    return graph;
}

std::vector<std::vector<size_t>> maximal_cliques(const CommutationGraph &graph) {
    const size_t n = graph.size();
    std::vector<std::vector<size_t>> cliques;
    std::vector<size_t> current;

    std::function<void(BitVec, BitVec)> expand = [&](BitVec candidates, BitVec excluded) {
        if (candidates.none() && excluded.none()) {
            cliques.push_back(current);
            std::sort(cliques.back().begin(), cliques.back().end());
            return;
        }
        // Pivot: the vertex of candidates ∪ excluded with most candidate neighbours.
        size_t pivot = n;
        size_t best = 0;
        for (size_t u = 0; u < n; u++) {
            if (!candidates.get(u) && !excluded.get(u)) {
                continue;
            }
            size_t score = (candidates & graph.adjacency[u]).popcount();
            if (pivot == n || score > best) {
                pivot = u;
                best = score;
            }
        }
        for (size_t v : candidates.set_indices()) {
            if (graph.adjacency[pivot].get(v)) {
                continue;
            }
            current.push_back(v);
            expand(candidates & graph.adjacency[v], excluded & graph.adjacency[v]);
            current.pop_back();
            candidates.set(v, false);
            excluded.set(v, true);
        }
    };

    BitVec all(n);
    for (size_t k = 0; k < n; k++) {
        all.set(k, true);
    }
    if (n > 0) {
        expand(all, BitVec(n));
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

std::vector<ContextGroup> maximal_contexts(const std::vector<PauliOperator> &observables) {
    const auto obs = canonical_observables(observables);
    std::vector<std::vector<PauliOperator>> member_lists;
    for (const auto &clique : maximal_cliques(commutation_graph(obs))) {
        std::vector<PauliOperator> members;
        for (size_t k : clique) {
            members.push_back(obs[k]);
        }
        std::sort(members.begin(), members.end());
        member_lists.push_back(std::move(members));
    }
    std::sort(member_lists.begin(), member_lists.end());
    std::vector<ContextGroup> contexts;
    for (const auto &members : member_lists) {
        contexts.push_back(ContextGroup::close(members));
    }
    return contexts;
}

ContextGroup intersect(const ContextGroup &a, const ContextGroup &b) {
    if (a.width() != b.width()) {
        throw Error(ErrorKind::WidthMismatch, "intersecting contexts of different widths");
    }
    const size_t n = a.width();
    std::vector<PauliOperator> generators;
    for (const auto &v : gf2::row_space_intersection(a.span_basis(), b.span_basis(), 2 * n)) {
        generators.push_back(positive_from_symplectic(v, n));
    }
    if (generators.empty()) {
        return ContextGroup(n);
    }
    return ContextGroup::close(generators);
}

bool ContextPoset::leq(size_t i, size_t j) const {
    return std::find(order.begin(), order.end(), std::pair{i, j}) != order.end();
}

ContextPoset build_poset(const std::vector<ContextGroup> &maximal) {
    ContextPoset poset;
    std::vector<std::vector<BitVec>> spans;
    auto add_node = [&](const ContextGroup &group) {
        auto span = group.span_basis();
        if (std::find(spans.begin(), spans.end(), span) != spans.end()) {
            return false;
        }
        spans.push_back(std::move(span));
        poset.nodes.push_back(group);
        return true;
    };
    for (const auto &group : maximal) {
        if (!poset.nodes.empty() && group.width() != poset.nodes.front().width()) {
            throw Error(ErrorKind::WidthMismatch, "poset contexts differ in width");
        }
        add_node(group);
    }
    poset.maximal_count = poset.nodes.size();

    size_t checked = 0;  // pairs (i, j) with j < checked were already intersected
    while (checked < poset.nodes.size()) {
        const size_t limit = poset.nodes.size();
        for (size_t j = checked; j < limit; j++) {
            for (size_t i = 0; i < j; i++) {
                add_node(intersect(poset.nodes[i], poset.nodes[j]));
            }
        }
        checked = limit;
    }

    for (size_t i = 0; i < poset.nodes.size(); i++) {
        for (size_t j = 0; j < poset.nodes.size(); j++) {
            if (poset.nodes[i].is_subgroup_of(poset.nodes[j])) {
                poset.order.emplace_back(i, j);
            }
        }
    }
    return poset;
}

}  // namespace contextua
