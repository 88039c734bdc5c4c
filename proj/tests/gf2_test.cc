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

#include "contextua/gf2.h"

#include <random>

#include "contextua/error.h"
#include "gtest/gtest.h"

using namespace contextua;
using namespace contextua::gf2;

namespace {

BitMatrix matrix(std::initializer_list<const char *> rows, size_t cols) {
    std::vector<BitVec> r;
    for (const char *row : rows) {
        r.push_back(BitVec::from_string(row));
    }
    return BitMatrix::from_rows(r, cols);
}

Gf2System system_of(BitMatrix a, const char *b) {
    Gf2System s{std::move(a), BitVec::from_string(b), {}};
    for (size_t k = 0; k < s.a.cols(); k++) {
        s.labels.push_back("v" + std::to_string(k));
    }
    return s;
}

BitMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    std::bernoulli_distribution coin(0.4);
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, coin(rng));
        }
    }
    return m;
}

bool is_rref(const RrefResult &res) {
    const auto &m = res.reduced;
    for (size_t r = 0; r < m.rows(); r++) {
        if (r < res.pivots.size()) {
            if (m.row(r).first_set() != res.pivots[r]) {
                return false;
            }
            if (r > 0 && res.pivots[r] <= res.pivots[r - 1]) {
                return false;
            }
            for (size_t other = 0; other < m.rows(); other++) {
                if (other != r && m.get(other, res.pivots[r])) {
                    return false;
                }
            }
        } else if (m.row(r).any()) {
            return false;
        }
    }
    return true;
}

size_t rank_of(const BitMatrix &m) {
    return rref(m).pivots.size();
}

}  // namespace

TEST(gf2, rref_examples) {
    auto id = BitMatrix::identity(3);
    auto r1 = rref(id);
    ASSERT_EQ(r1.reduced, id);
    ASSERT_EQ(r1.pivots, (std::vector<size_t>{0, 1, 2}));
    ASSERT_EQ(r1.transform, id);

    auto r2 = rref(BitMatrix(2, 3));
    ASSERT_TRUE(r2.reduced.is_zero());
    ASSERT_TRUE(r2.pivots.empty());

    auto r3 = rref(matrix({"11", "11"}, 2));
    ASSERT_EQ(r3.reduced, matrix({"11", "00"}, 2));
    ASSERT_EQ(r3.transform.row(1), BitVec::from_string("11"));
}

TEST(gf2, rref_properties_random) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        auto m = random_matrix(rng, 1 + trial % 7, 1 + trial % 9);
        auto res = rref(m);
        ASSERT_EQ(res.transform * m, res.reduced);
        ASSERT_TRUE(is_rref(res));
        ASSERT_EQ(rank_of(res.transform), m.rows());
        // Deterministic: same input, same output.
        auto again = rref(m);
        ASSERT_EQ(again.transform, res.transform);
    }
}

TEST(gf2, solve_examples) {
    auto sol = std::get<Solution>(solve(system_of(BitMatrix::identity(2), "10")));
    ASSERT_EQ(sol.assignment, BitVec::from_string("10"));
    ASSERT_TRUE(sol.nullspace.empty());

    auto sol2 = std::get<Solution>(solve(system_of(matrix({"11"}, 2), "0")));
    ASSERT_EQ(sol2.assignment, BitVec::from_string("00"));
    ASSERT_EQ(sol2.nullspace, (std::vector<BitVec>{BitVec::from_string("11")}));
}

TEST(gf2, solve_mermin_relations) {
    // Variables: X1 Y1 X2 Y2 X3 Y3 XXX XYY YXY YYX.
    auto a = matrix({"1010101000", "1001010100", "0110010010", "0101100001", "0000001111"}, 10);
    auto s = system_of(a, "00001");
    auto result = solve(s);
    ASSERT_TRUE(std::holds_alternative<Certificate>(result));
    const auto &cert = std::get<Certificate>(result);
    ASSERT_EQ(cert.row_selector, BitVec::from_string("11111"));
    ASSERT_TRUE(verify_certificate(s, cert));
}

TEST(gf2, solve_matches_brute_force) {
    std::mt19937_64 rng(99);
    int consistent = 0;
    int inconsistent = 0;
    for (int trial = 0; trial < 600; trial++) {
        std::uniform_int_distribution<size_t> vars_pick(1, 12);
        std::uniform_int_distribution<size_t> rows_pick(1, 14);
        const size_t v = vars_pick(rng);
        const size_t r = rows_pick(rng);
        auto a = random_matrix(rng, r, v);
        BitVec b(r);
        std::bernoulli_distribution coin(0.5);
        for (size_t k = 0; k < r; k++) {
            b.set(k, coin(rng));
        }
        Gf2System s{a, b, {}};
        for (size_t k = 0; k < v; k++) {
            s.labels.push_back("x" + std::to_string(k));
        }

        size_t solutions = 0;
        for (uint64_t x = 0; x < (uint64_t{1} << v); x++) {
            solutions += satisfies(s, BitVec::from_uint(v, x));
        }

        auto result = solve(s);
        if (auto *sol = std::get_if<Solution>(&result)) {
            consistent++;
            ASSERT_GT(solutions, 0u);
            ASSERT_TRUE(satisfies(s, sol->assignment));
            ASSERT_EQ(solutions, size_t{1} << sol->nullspace.size());
            for (const auto &n : sol->nullspace) {
                ASSERT_TRUE(a.apply(n).none());
            }
        } else {
            inconsistent++;
            ASSERT_EQ(solutions, 0u);
            const auto &cert = std::get<Certificate>(result);
            ASSERT_TRUE(a.combine_rows(cert.row_selector).none());
            ASSERT_TRUE(cert.row_selector.dot(b));
        }
    }
    ASSERT_GT(consistent, 50);
    ASSERT_GT(inconsistent, 50);
}

TEST(gf2, left_nullspace_and_intersection) {
    auto m = matrix({"110", "011", "101"}, 3);
    auto ln = left_nullspace(m);
    ASSERT_EQ(ln.size(), 1u);
    ASSERT_EQ(ln[0], BitVec::from_string("111"));

    std::vector<BitVec> u{BitVec::from_string("1100"), BitVec::from_string("0010")};
    std::vector<BitVec> v{BitVec::from_string("1110"), BitVec::from_string("0001")};
    auto common = row_space_intersection(u, v, 4);
    ASSERT_EQ(common, (std::vector<BitVec>{BitVec::from_string("1110")}));
    ASSERT_TRUE(row_space_intersection({BitVec::from_string("10")}, {BitVec::from_string("01")}, 2).empty());
}

TEST(gf2, incremental_basis) {
    IncrementalBasis basis(4);
    ASSERT_TRUE(basis.add(BitVec::from_string("1100")));
    ASSERT_TRUE(basis.add(BitVec::from_string("0110")));
    ASSERT_FALSE(basis.add(BitVec::from_string("1010")));
    ASSERT_TRUE(basis.add(BitVec::from_string("0001")));
    ASSERT_EQ(basis.rank(), 3u);
    ASSERT_EQ(*basis.decompose(BitVec::from_string("1011")), BitVec::from_string("111"));
    ASSERT_FALSE(basis.decompose(BitVec::from_string("1000")).has_value());
}

TEST(gf2, fit_affine_examples) {
    auto xor_form = fit_affine(TruthTable{2, BitVec::from_string("0110")});
    ASSERT_TRUE(xor_form.has_value());
    ASSERT_EQ(xor_form->a, BitVec::from_string("11"));
    ASSERT_FALSE(xor_form->c);

    ASSERT_FALSE(fit_affine(TruthTable{2, BitVec::from_string("0111")}).has_value());

    auto one = fit_affine(TruthTable{3, BitVec::from_string("11111111")});
    ASSERT_EQ(one->a, BitVec(3));
    ASSERT_TRUE(one->c);

    try {
        fit_affine(TruthTable{2, BitVec::from_string("011")});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::IncompleteTable);
    }
}

TEST(gf2, truth_table_indexing) {
    ASSERT_EQ(TruthTable::input_at(2, 1), BitVec::from_string("01"));
    ASSERT_EQ(TruthTable::input_at(3, 4), BitVec::from_string("100"));
    for (size_t k = 0; k < 16; k++) {
        ASSERT_EQ(TruthTable::index_of(TruthTable::input_at(4, k)), k);
    }
}

TEST(gf2, fit_affine_matches_exhaustive_search) {
    for (size_t m = 0; m <= 4; m++) {
        const size_t entries = size_t{1} << m;
        std::mt19937_64 rng(m);
        // All tables for m ≤ 3, a random sample of 3000 for m = 4.
        const size_t tables = m <= 3 ? (size_t{1} << entries) : 3000;
        for (size_t t = 0; t < tables; t++) {
            uint64_t bits = m <= 3 ? t : rng() & 0xffff;
            if (m == 4 && t % 10 == 0) {
                // Mix in genuinely affine tables, which random sampling rarely hits.
                bits = 0;
                const uint64_t a = rng() & 0xf;
                const bool c = rng() & 1;
                for (size_t index = 0; index < entries; index++) {
                    auto in = TruthTable::input_at(m, index);
                    if (AffineForm{BitVec::from_uint(m, a), c}.eval(in)) {
                        bits |= uint64_t{1} << index;
                    }
                }
            }
            TruthTable table{m, BitVec::from_uint(entries, bits)};
            std::optional<AffineForm> found;
            for (uint64_t a = 0; a < entries; a++) {
                for (int c = 0; c < 2; c++) {
                    AffineForm form{BitVec::from_uint(m, a), c == 1};
                    bool ok = true;
                    for (size_t index = 0; index < entries && ok; index++) {
                        ok = form.eval(TruthTable::input_at(m, index)) == table.outputs.get(index);
                    }
                    if (ok) {
                        found = form;
                    }
                }
            }
            ASSERT_EQ(fit_affine(table), found) << "m=" << m << " table=" << table.outputs.str();
        }
    }
}
