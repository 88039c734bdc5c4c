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

#include "contextua/presheaf.h"

#include <algorithm>
#include <bit>

#include "contextua/error.h"

namespace contextua {

StateConstraint StateConstraint::from_signed(const PauliOperator &p, bool eigen_bit) {
    return StateConstraint{p.positive(), eigen_bit != p.sign_bit()};
}

bool is_valuation(const ContextGroup &context, const Assignment &values) {
    for (const auto &rel : context.relations()) {
        bool parity = false;
        for (size_t k : rel.members) {
            auto it = values.find(context.members()[k]);
            if (it == values.end()) {
                return false;
            }
            parity ^= it->second;
        }
        if (parity != rel.sign) {
            return false;
        }
    }
    return true;
}

std::vector<Valuation> spectrum(const ContextGroup &context) {
    constexpr size_t kMaxRank = 24;
    const size_t g = context.rank();
    if (g > kMaxRank) {
        throw Error(ErrorKind::TooLarge, "spectrum of a rank-" + std::to_string(g) + " context");
    }
    auto shared = std::make_shared<const ContextGroup>(context);
    const auto &members = shared->members();
    const auto &independent = shared->independent();

    std::vector<Expression> expressions;
    for (const auto &m : members) {
        expressions.push_back(*shared->express(m));
    }

    std::vector<Valuation> result;
    result.reserve(size_t{1} << g);
    for (uint64_t mask = 0; mask < (uint64_t{1} << g); mask++) {
        Assignment generator_values;
        for (size_t j = 0; j < g; j++) {
            generator_values[members[independent[j]]] = (mask >> j) & 1;
        }
        Valuation v{shared, {}};
        for (size_t k = 0; k < members.size(); k++) {
            bool bit = expressions[k].sign;
            for (size_t gen : expressions[k].generators) {
                bit ^= generator_values.at(members[gen]);
            }
            v.values[members[k]] = bit;
        }
        if (!is_valuation(*shared, v.values)) {
            throw Error(ErrorKind::EmptySpectrum, "context relations admit no multiplicative assignment");
        }
        result.push_back(std::move(v));
    }
    return result;
}

Valuation restrict(const Valuation &v, const ContextGroup &sub) {
    if (!v.context || !sub.is_subgroup_of(*v.context)) {
        throw Error(ErrorKind::NotASubcontext, "restriction target is not contained in the valuation's context");
    }
    Valuation result{std::make_shared<const ContextGroup>(sub), {}};
    for (const auto &m : sub.members()) {
        auto expr = v.context->express(m);
        bool bit = expr->sign;
        for (size_t gen : expr->generators) {
            bit ^= v.values.at(v.context->members()[gen]);
        }
        result.values[m] = bit;
    }
    return result;
}

size_t GlobalProblem::variable_index(const PauliOperator &observable) const {
    auto it = std::find(variables.begin(), variables.end(), observable);
    if (it == variables.end()) {
        throw Error(ErrorKind::UnknownConstrainedObservable, observable.str() + " does not occur in any context");
    }
    return static_cast<size_t>(it - variables.begin());
}

GlobalProblem build_global_problem(std::vector<ContextGroup> contexts, std::vector<StateConstraint> constraints) {
    GlobalProblem problem;
    for (const auto &ctx : contexts) {
        if (ctx.width() != contexts.front().width()) {
            throw Error(ErrorKind::WidthMismatch, "contexts act on different numbers of qubits");
        }
        for (const auto &m : ctx.members()) {
            if (std::find(problem.variables.begin(), problem.variables.end(), m) == problem.variables.end()) {
                problem.variables.push_back(m);
            }
        }
    }
    for (auto &c : constraints) {
        c = StateConstraint::from_signed(c.observable, c.bit);
    }
    problem.contexts = std::move(contexts);
    problem.constraints = std::move(constraints);

    const size_t v = problem.variables.size();
    std::vector<BitVec> rows;
    std::vector<bool> rhs;
    for (size_t c = 0; c < problem.contexts.size(); c++) {
        const auto &ctx = problem.contexts[c];
        for (size_t r = 0; r < ctx.relations().size(); r++) {
            BitVec row(v);
            for (size_t k : ctx.relations()[r].members) {
                row.flip(problem.variable_index(ctx.members()[k]));
            }
            rows.push_back(std::move(row));
            rhs.push_back(ctx.relations()[r].sign);
            problem.origins.push_back({RowOrigin::Kind::Relation, c, r});
        }
    }
    for (size_t p = 0; p < problem.constraints.size(); p++) {
        rows.push_back(BitVec::unit(v, problem.variable_index(problem.constraints[p].observable)));
        rhs.push_back(problem.constraints[p].bit);
        problem.origins.push_back({RowOrigin::Kind::Pin, 0, p});
    }

    problem.system.a = gf2::BitMatrix::from_rows(std::move(rows), v);
    problem.system.b = BitVec(rhs.size());
    for (size_t r = 0; r < rhs.size(); r++) {
        problem.system.b.set(r, rhs[r]);
    }
    for (const auto &var : problem.variables) {
        problem.system.labels.push_back(var.str());
    }
    return problem;
}

GlobalResult solve_global(const GlobalProblem &problem) {
    auto result = gf2::solve(problem.system);
    if (auto *cert = std::get_if<gf2::Certificate>(&result)) {
        return *cert;
    }
    const auto &sol = std::get<gf2::Solution>(result);
    GlobalSection section;
    section.solution_dimension = sol.nullspace.size();
    for (size_t k = 0; k < problem.variables.size(); k++) {
        section.values[problem.variables[k]] = sol.assignment.get(k);
    }
    return section;
}

bool is_global_section(const GlobalProblem &problem, const Assignment &section) {
    for (const auto &ctx : problem.contexts) {
        if (!is_valuation(ctx, section)) {
            return false;
        }
    }
    for (const auto &c : problem.constraints) {
        auto it = section.find(c.observable);
        if (it == section.end() || it->second != c.bit) {
            return false;
        }
    }
    return true;
}

BruteForceResult brute_force_global(const std::vector<ContextGroup> &contexts,
                                    const std::vector<StateConstraint> &constraints) {
    constexpr size_t kMaxVariables = 20;
    const auto problem = build_global_problem(contexts, constraints);
    const size_t v = problem.variables.size();
    if (v > kMaxVariables) {
        throw Error(ErrorKind::TooLarge, std::to_string(v) + " observables exceed the exhaustive-search limit of " +
                                             std::to_string(kMaxVariables));
    }
    std::vector<uint64_t> row_masks;
    for (size_t r = 0; r < problem.system.a.rows(); r++) {
        uint64_t mask = 0;
        for (size_t k : problem.system.a.row(r).set_indices()) {
            mask |= uint64_t{1} << k;
        }
        row_masks.push_back(mask);
    }

    BruteForceResult result;
    for (uint64_t candidate = 0; candidate < (uint64_t{1} << v); candidate++) {
        result.candidates++;
        bool ok = true;
        for (size_t r = 0; r < row_masks.size() && ok; r++) {
            ok = ((std::popcount(candidate & row_masks[r]) & 1) != 0) == problem.system.b.get(r);
        }
        if (ok) {
            GlobalSection section;
            for (size_t k = 0; k < v; k++) {
                section.values[problem.variables[k]] = (candidate >> k) & 1;
            }
            result.section = std::move(section);
            return result;
        }
    }
    return result;
}

}  // namespace contextua
