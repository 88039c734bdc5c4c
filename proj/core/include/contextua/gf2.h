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

#ifndef CONTEXTUA_GF2_H
#define CONTEXTUA_GF2_H

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "contextua/bitvec.h"

namespace contextua::gf2 {

/// Dense GF(2) matrix stored as a list of packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);
    /// All rows must share one length; `cols` disambiguates the zero-row case.
    static BitMatrix from_rows(std::vector<BitVec> rows, size_t cols);
    static BitMatrix identity(size_t n);

    size_t rows() const noexcept {
        return rows_.size();
    }
    size_t cols() const noexcept {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return rows_.at(r).get(c);
    }
    void set(size_t r, size_t c, bool v) {
        rows_.at(r).set(c, v);
    }
    const BitVec &row(size_t r) const {
        return rows_.at(r);
    }
    BitVec &row(size_t r) {
        return rows_.at(r);
    }
    void swap_rows(size_t a, size_t b);
    void append_row(BitVec row);

    BitMatrix operator*(const BitMatrix &rhs) const;
    /// Matrix-vector product A·v.
    BitVec apply(const BitVec &v) const;
    /// Row combination selectorᵀ·A (sum of the selected rows).
    BitVec combine_rows(const BitVec &selector) const;
    BitMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix reduced;
    std::vector<size_t> pivots;
    /// Invertible, with reduced == transform * input.
    BitMatrix transform;
};

/// Gauss-Jordan elimination. Pivot columns are taken left to right and the
/// pivot row is the lowest-index remaining row with a one in that column,
/// so results are reproducible bit for bit.
RrefResult rref(const BitMatrix &m);

/// A·x = b with named unknowns.
struct Gf2System {
    BitMatrix a;
    BitVec b;
    std::vector<std::string> labels;

    void validate() const;
};

/// Selected rows of A sum to zero while the selected entries of b sum to one.
struct Certificate {
    BitVec row_selector;

    bool operator==(const Certificate &) const = default;
};

struct Solution {
    BitVec assignment;
    std::vector<BitVec> nullspace;
};

using SolveResult = std::variant<Solution, Certificate>;

/// Decides A·x = b. On success the free variables of the returned assignment
/// are zero. On failure the certificate is the first row of the transform whose
/// reduced A-part vanishes but whose right-hand side is one.
SolveResult solve(const Gf2System &system);

bool verify_certificate(const Gf2System &system, const Certificate &cert);
bool satisfies(const Gf2System &system, const BitVec &assignment);

/// Basis of the left nullspace {y : yᵀ·M = 0}, one vector per zero row of rref(M).
std::vector<BitVec> left_nullspace(const BitMatrix &m);

/// Basis of the intersection of two row spaces of equal width, in rref form.
std::vector<BitVec> row_space_intersection(const std::vector<BitVec> &u, const std::vector<BitVec> &v, size_t width);

/// Row-space basis of the given vectors in reduced row-echelon form; two sets
/// span the same space iff their canonical bases are equal.
std::vector<BitVec> canonical_basis(const std::vector<BitVec> &vectors, size_t width);

/// Incremental elimination basis that remembers how every stored vector was
/// built from the vectors accepted so far. Used for span membership with an
/// explicit decomposition.
class IncrementalBasis {
   public:
    explicit IncrementalBasis(size_t width) : width_(width) {
    }

    size_t width() const noexcept {
        return width_;
    }
    size_t rank() const noexcept {
        return reduced_.size();
    }

    /// Adds `v` if it is independent of the accepted vectors. Returns whether
    /// it was accepted; accepted vectors are numbered 0, 1, ... in order.
    bool add(const BitVec &v);

    /// Coefficients over accepted vectors whose sum is `v`, or nullopt if `v`
    /// lies outside the span.
    std::optional<BitVec> decompose(const BitVec &v) const;

   private:
    std::pair<BitVec, BitVec> reduce(const BitVec &v) const;

    size_t width_;
    std::vector<BitVec> reduced_;
    std::vector<size_t> pivot_;
    std::vector<BitVec> combination_;
};

/// A complete Boolean function on m input bits.
///
/// Output k belongs to the input whose bit string i_1 ... i_m, read with i_1
/// most significant, is the binary numeral k. Listing outputs in index order
/// therefore lists inputs in lexicographic order of their bit strings.
struct TruthTable {
    size_t input_bits = 0;
    BitVec outputs;

    static BitVec input_at(size_t input_bits, size_t index);
    static size_t index_of(const BitVec &input);

    bool at(const BitVec &input) const {
        return outputs.get(index_of(input));
    }
    void validate() const;

    bool operator==(const TruthTable &) const = default;
};

/// o(i) = a·i ⊕ c.
struct AffineForm {
    BitVec a;
    bool c = false;

    bool eval(const BitVec &input) const {
        return a.dot(input) != c;
    }
    bool operator==(const AffineForm &) const = default;
};

/// Returns the unique affine form matching the table, or nullopt if none.
std::optional<AffineForm> fit_affine(const TruthTable &table);

}  // namespace contextua::gf2

#endif
