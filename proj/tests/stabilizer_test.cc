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

#include "contextua/stabilizer.h"

#include <random>

#include "contextua/error.h"
#include "contextua/fixtures.h"
#include "gtest/gtest.h"
#include "test_support.h"

using namespace contextua;
namespace t = contextua::testing;
using t::dense_expectation;

namespace {

std::vector<PauliOperator> paulis(std::initializer_list<const char *> texts) {
    std::vector<PauliOperator> out;
    for (const char *t : texts) {
        out.push_back(parse_pauli(t));
    }
    return out;
}

ErrorKind make_error(std::initializer_list<const char *> texts) {
    try {
        make_stabilizer(paulis(texts));
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::Parse;
}

std::vector<t::Complex> to_vector(const DenseState &s) {
    return s.amplitudes;
}

}  // namespace

TEST(stabilizer, make_validates) {
    ASSERT_EQ(make_error({"XI", "ZI"}), ErrorKind::NonCommutingGenerators);
    ASSERT_EQ(make_error({"XX", "ZZ", "-YY"}), ErrorKind::DependentGenerators);
    ASSERT_EQ(make_error({"XX", "-XX"}), ErrorKind::MinusIdentityInGroup);
    ASSERT_EQ(make_error({"-I"}), ErrorKind::MinusIdentityInGroup);
    ASSERT_EQ(make_error({"XX", "Z"}), ErrorKind::WidthMismatch);
    ASSERT_FALSE(make_stabilizer(paulis({"XX"})).is_full());
    ASSERT_TRUE(make_stabilizer(paulis({"XX", "ZZ"})).is_full());
}

TEST(stabilizer, member_sign_ghz_examples) {
    auto g = make_stabilizer(fixtures::ghz_generators(3));
    ASSERT_EQ(g.member_sign(parse_pauli("XXX")), MemberSign::Plus);
    ASSERT_EQ(g.member_sign(parse_pauli("XYY")), MemberSign::Minus);
    ASSERT_EQ(g.member_sign(parse_pauli("YXY")), MemberSign::Minus);
    ASSERT_EQ(g.member_sign(parse_pauli("YYX")), MemberSign::Minus);
    ASSERT_EQ(g.member_sign(parse_pauli("-YYX")), MemberSign::Plus);
    ASSERT_EQ(g.member_sign(parse_pauli("ZIZ")), MemberSign::Plus);
    ASSERT_EQ(g.member_sign(parse_pauli("XII")), MemberSign::NotMember);
    ASSERT_EQ(g.member_sign(parse_pauli("III")), MemberSign::Plus);
    ASSERT_EQ(g.member_sign(parse_pauli("-III")), MemberSign::Minus);
}

TEST(stabilizer, ghz_state_vector_matches_oracle) {
    auto psi = state_vector(make_stabilizer(fixtures::ghz_generators(3)));
    auto expected = t::ghz_vector(3);
    ASSERT_EQ(psi.amplitudes.size(), expected.size());
    for (size_t k = 0; k < expected.size(); k++) {
        ASSERT_NEAR(std::abs(psi.amplitudes[k] - expected[k]), 0.0, 1e-12);
    }
}

TEST(stabilizer, basis_order_matches_kron) {
    // |0> on qubit 0 and |1> on qubit 1 is basis index 0b01 under kron order.
    auto psi = state_vector(make_stabilizer(paulis({"ZI", "-IZ"})));
    ASSERT_NEAR(std::abs(psi.amplitudes[1] - 1.0), 0.0, 1e-12);
}

TEST(stabilizer, apply_pauli_matches_dense_matrix) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; trial++) {
        const size_t n = 1 + trial % 4;
        auto psi = state_vector(make_stabilizer(t::random_stabilizer_generators(rng, n, n)));
        auto p = t::random_pauli(rng, n);
        auto moved = apply_pauli(p, psi);
        auto dense = t::mat_vec(t::dense_from_bits(p), psi.amplitudes);
        for (size_t k = 0; k < dense.size(); k++) {
            ASSERT_NEAR(std::abs(moved.amplitudes[k] - dense[k]), 0.0, 1e-12);
        }
    }
}

TEST(stabilizer, member_sign_matches_dense_expectation_random) {
    std::mt19937_64 rng(77);
    size_t plus = 0, minus = 0, none = 0;
    for (int trial = 0; trial < 80; trial++) {
        const size_t n = 1 + trial % 5;
        auto group = make_stabilizer(t::random_stabilizer_generators(rng, n, n));
        auto psi = state_vector(group);
        for (const auto &g : group.generators()) {
            ASSERT_EQ(group.member_sign(g), MemberSign::Plus);
        }
        for (int probe = 0; probe < 20; probe++) {
            auto p = t::random_hermitian(rng, n);
            const double e = dense_expectation(to_vector(psi), p.str());
            ASSERT_NEAR(e, expectation(psi, p), 1e-9);
            switch (group.member_sign(p)) {
                case MemberSign::Plus:
                    plus++;
                    ASSERT_NEAR(e, 1.0, 1e-9);
                    break;
                case MemberSign::Minus:
                    minus++;
                    ASSERT_NEAR(e, -1.0, 1e-9);
                    break;
                case MemberSign::NotMember:
                    none++;
                    ASSERT_NEAR(e, 0.0, 1e-9);
                    break;
            }
        }
    }
    ASSERT_GT(plus, 0u);
    ASSERT_GT(minus, 0u);
    ASSERT_GT(none, 0u);
}

TEST(stabilizer, products_stay_in_group) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        const size_t n = 2 + trial % 4;
        auto gens = t::random_stabilizer_generators(rng, n, 1 + trial % n);
        auto group = make_stabilizer(gens);
        PauliOperator acc(n);
        for (const auto &g : gens) {
            if (rng() & 1) {
                acc = acc * g;
            }
        }
        ASSERT_EQ(group.member_sign(acc), MemberSign::Plus);
        ASSERT_EQ(group.member_sign(acc.negated()), MemberSign::Minus);
    }
}

TEST(stabilizer, dense_width_limit) {
    std::vector<PauliOperator> gens;
    for (size_t k = 0; k <= kMaxDenseWidth; k++) {
        gens.push_back(PauliOperator::single(kMaxDenseWidth + 1, k, 'Z'));
    }
    try {
        state_vector(make_stabilizer(gens));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::WidthTooLarge);
    }
}
