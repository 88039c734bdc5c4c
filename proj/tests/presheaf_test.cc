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
#include <random>

#include "contextua/error.h"
#include "contextua/fixtures.h"
#include "gtest/gtest.h"
#include "test_support.h"

using namespace contextua;

namespace {

std::vector<PauliOperator> paulis(std::initializer_list<const char *> texts) {
    std::vector<PauliOperator> out;
    for (const char *t : texts) {
        out.push_back(parse_pauli(t));
    }
    return out;
}

/// GHZ eigenvalue bits of the three-qubit observables, from the dense oracle.
std::vector<StateConstraint> ghz_pins() {
    const auto psi = contextua::testing::ghz_vector(3);
    std::vector<StateConstraint> pins;
    for (const char *joint : {"XXX", "XYY", "YXY", "YYX"}) {
        const double e = contextua::testing::dense_expectation(psi, joint);
        EXPECT_NEAR(std::abs(e), 1.0, 1e-12);
        pins.push_back({parse_pauli(joint), e < 0});
    }
    return pins;
}

size_t selected_count(const GlobalResult &r) {
    return std::get<gf2::Certificate>(r).row_selector.popcount();
}

}  // namespace

TEST(presheaf, spectrum_examples) {
    auto x = spectrum(close_context(paulis({"X"})));
    ASSERT_EQ(x.size(), 2u);
    ASSERT_FALSE(x[0].values.at(parse_pauli("X")));
    ASSERT_TRUE(x[1].values.at(parse_pauli("X")));

    auto w5 = fixtures::mermin_contexts()[4];
    auto points = spectrum(w5);
    ASSERT_EQ(points.size(), 8u);
    for (const auto &v : points) {
        const bool product = v.values.at(parse_pauli("XYY")) ^ v.values.at(parse_pauli("YXY")) ^
                             v.values.at(parse_pauli("YYX"));
        // λ(XXX) = -λ(XYY)λ(YXY)λ(YYX)
        ASSERT_EQ(v.values.at(parse_pauli("XXX")), !product);
        ASSERT_TRUE(is_valuation(w5, v.values));
    }

    Assignment ghz;
    for (const auto &pin : ghz_pins()) {
        ghz[pin.observable] = pin.bit;
    }
    ASSERT_EQ(ghz.at(parse_pauli("XXX")), false);
    ASSERT_EQ(ghz.at(parse_pauli("XYY")), true);
    ASSERT_TRUE(std::any_of(points.begin(), points.end(), [&](const Valuation &v) { return v.values == ghz; }));
}

TEST(presheaf, spectrum_size_matches_rank_random) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 120; trial++) {
        const size_t n = 1 + trial % 4;
        auto ctx = close_context(contextua::testing::random_commuting_set(rng, n, 1 + trial % 6));
        auto points = spectrum(ctx);
        ASSERT_EQ(points.size(), size_t{1} << ctx.rank());
        for (const auto &v : points) {
            ASSERT_TRUE(is_valuation(ctx, v.values));
        }
        // Exhaustive count over all member assignments agrees.
        const size_t members = ctx.members().size();
        size_t count = 0;
        for (uint64_t mask = 0; mask < (uint64_t{1} << members); mask++) {
            Assignment a;
            for (size_t k = 0; k < members; k++) {
                a[ctx.members()[k]] = (mask >> k) & 1;
            }
            count += is_valuation(ctx, a);
        }
        ASSERT_EQ(count, points.size());
    }
}

TEST(presheaf, restrict_examples) {
    const auto w1 = fixtures::mermin_contexts()[0];
    const auto points = spectrum(w1);

    auto empty = restrict(points[3], ContextGroup(3));
    ASSERT_TRUE(empty.values.empty());

    auto xxx = close_context(paulis({"XXX"}));
    for (const auto &v : points) {
        auto r = restrict(v, xxx);
        ASSERT_EQ(r.values.size(), 1u);
        ASSERT_EQ(r.values.at(parse_pauli("XXX")), v.values.at(parse_pauli("XXX")));
    }

    try {
        restrict(points[0], close_context(paulis({"YII"})));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotASubcontext);
    }
}

TEST(presheaf, restriction_preserves_spectrum_on_mermin_poset) {
    const auto poset = build_poset(fixtures::mermin_contexts());
    for (const auto &[sub, sup] : poset.order) {
        const auto sub_points = spectrum(poset.nodes[sub]);
        for (const auto &v : spectrum(poset.nodes[sup])) {
            auto r = restrict(v, poset.nodes[sub]);
            ASSERT_TRUE(std::any_of(sub_points.begin(), sub_points.end(),
                                    [&](const Valuation &w) { return w.values == r.values; }));
        }
    }
}

TEST(presheaf, build_global_problem_examples) {
    auto mermin = build_global_problem(fixtures::mermin_contexts(), {});
    ASSERT_EQ(mermin.variables.size(), 10u);
    ASSERT_EQ(mermin.system.a.rows(), 5u);

    auto single = build_global_problem({close_context(paulis({"X"}))}, {{parse_pauli("X"), false}});
    ASSERT_EQ(single.variables.size(), 1u);
    ASSERT_EQ(single.system.a.rows(), 1u);
    ASSERT_EQ(single.origins[0].kind, RowOrigin::Kind::Pin);

    auto pinned = build_global_problem(fixtures::mermin_contexts(), ghz_pins());
    ASSERT_EQ(pinned.variables.size(), 10u);
    ASSERT_EQ(pinned.system.a.rows(), 9u);

    try {
        build_global_problem({close_context(paulis({"X"}))}, {{parse_pauli("Z"), false}});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::UnknownConstrainedObservable);
    }
}

TEST(presheaf, signed_pins_are_normalised) {
    auto c = StateConstraint::from_signed(parse_pauli("-XYY"), false);
    ASSERT_EQ(c.observable, parse_pauli("XYY"));
    ASSERT_TRUE(c.bit);
}

TEST(presheaf, solve_global_mermin_state_independent) {
    auto problem = build_global_problem(fixtures::mermin_contexts(), {});
    auto result = solve_global(problem);
    ASSERT_TRUE(std::holds_alternative<gf2::Certificate>(result));
    ASSERT_EQ(selected_count(result), 5u);
    ASSERT_TRUE(gf2::verify_certificate(problem.system, std::get<gf2::Certificate>(result)));

    auto brute = brute_force_global(fixtures::mermin_contexts(), {});
    ASSERT_FALSE(brute.section.has_value());
    ASSERT_EQ(brute.candidates, 1024u);
}

TEST(presheaf, solve_global_single_context_has_section) {
    auto problem = build_global_problem({fixtures::mermin_contexts()[0]}, {});
    auto result = solve_global(problem);
    ASSERT_TRUE(std::holds_alternative<GlobalSection>(result));
    const auto &section = std::get<GlobalSection>(result);
    ASSERT_TRUE(is_global_section(problem, section.values));
    ASSERT_EQ(section.solution_dimension, 3u);
}

TEST(presheaf, solve_global_mermin_with_ghz_pins) {
    auto problem = build_global_problem(fixtures::mermin_contexts(), ghz_pins());
    auto result = solve_global(problem);
    ASSERT_TRUE(std::holds_alternative<gf2::Certificate>(result));
    ASSERT_TRUE(gf2::verify_certificate(problem.system, std::get<gf2::Certificate>(result)));
    ASSERT_FALSE(brute_force_global(fixtures::mermin_contexts(), ghz_pins()).section.has_value());
}

TEST(presheaf, state_dependent_proof_needs_the_pins) {
    // Without the fifth context only the GHZ pins can close the contradiction.
    auto local = fixtures::mermin_contexts();
    local.pop_back();
    ASSERT_TRUE(std::holds_alternative<GlobalSection>(solve_global(build_global_problem(local, {}))));

    auto problem = build_global_problem(local, ghz_pins());
    auto result = solve_global(problem);
    ASSERT_TRUE(std::holds_alternative<gf2::Certificate>(result));
    const auto &cert = std::get<gf2::Certificate>(result);
    ASSERT_EQ(cert.row_selector, BitVec::from_string("11111111"));
    ASSERT_TRUE(gf2::verify_certificate(problem.system, cert));
    ASSERT_FALSE(brute_force_global(local, ghz_pins()).section.has_value());
}

TEST(presheaf, brute_force_examples) {
    auto r = brute_force_global({close_context(paulis({"X"})), close_context(paulis({"Z"}))}, {});
    ASSERT_TRUE(r.section.has_value());
    ASSERT_LE(r.candidates, 4u);
    ASSERT_EQ(r.section->values.at(parse_pauli("X")), false);

    std::vector<ContextGroup> many;
    for (size_t k = 0; k < 21; k++) {
        many.push_back(close_context({PauliOperator::single(21, k, 'Z')}));
    }
    try {
        brute_force_global(many, {});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(presheaf, clique_contexts_reproduce_mermin_system) {
    auto problem = build_global_problem(maximal_contexts(fixtures::mermin_observables()), {});
    ASSERT_EQ(problem.variables.size(), 10u);
    ASSERT_EQ(problem.system.a.rows(), 5u);
    auto result = solve_global(problem);
    ASSERT_EQ(selected_count(result), 5u);
}

TEST(presheaf, solver_agrees_with_brute_force_random) {
    std::mt19937_64 rng(1234);
    std::bernoulli_distribution coin(0.5);
    size_t contextual = 0;
    size_t total = 0;
    for (int trial = 0; trial < 1000; trial++) {
        const size_t n = 2 + trial % 2;
        std::vector<PauliOperator> obs;
        for (int k = 0; k < 6 + trial % 5; k++) {
            obs.push_back(contextua::testing::random_hermitian(rng, n));
        }
        obs = canonical_observables(obs);
        obs.erase(std::remove_if(obs.begin(), obs.end(), [](const auto &p) { return p.is_scalar(); }), obs.end());
        if (obs.empty()) {
            continue;
        }
        auto contexts = maximal_contexts(obs);
        std::vector<StateConstraint> pins;
        for (const auto &p : obs) {
            if (coin(rng)) {
                pins.push_back({p, coin(rng)});
            }
        }
        auto problem = build_global_problem(contexts, pins);
        if (problem.variables.size() > 20) {
            continue;
        }
        total++;
        auto fast = solve_global(problem);
        auto slow = brute_force_global(contexts, pins);
        ASSERT_EQ(std::holds_alternative<GlobalSection>(fast), slow.section.has_value());
        if (auto *s = std::get_if<GlobalSection>(&fast)) {
            ASSERT_TRUE(is_global_section(problem, s->values));
            ASSERT_TRUE(is_global_section(problem, slow.section->values));
        } else {
            contextual++;
            ASSERT_TRUE(gf2::verify_certificate(problem.system, std::get<gf2::Certificate>(fast)));
        }

        // Monotonicity: more pins never make a pointless presheaf pointed.
        auto more = pins;
        more.push_back({obs.front(), coin(rng)});
        auto tighter = solve_global(build_global_problem(contexts, more));
        if (std::holds_alternative<gf2::Certificate>(fast)) {
            ASSERT_TRUE(std::holds_alternative<gf2::Certificate>(tighter));
        }
    }
    ASSERT_GT(total, 200u);
    ASSERT_GT(contextual, 10u);
}
