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

#include <stdexcept>

#include "contextua/error.h"

namespace contextua::gf2 {

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, size_t cols) {
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("matrix rows must all have length " + std::to_string(cols));
        }
    }
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    std::swap(rows_.at(a), rows_.at(b));
}

void BitMatrix::append_row(BitVec row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("appended row has the wrong length");
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::operator*(const BitMatrix &rhs) const {
    if (cols_ != rhs.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    BitMatrix result(rows(), rhs.cols());
    for (size_t r = 0; r < rows(); r++) {
        result.rows_[r] = rhs.combine_rows(rows_[r]);
    }
    return result;
}

BitVec BitMatrix::apply(const BitVec &v) const {
    BitVec result(rows());
    for (size_t r = 0; r < rows(); r++) {
        result.set(r, rows_[r].dot(v));
    }
    return result;
}

BitVec BitMatrix::combine_rows(const BitVec &selector) const {
    if (selector.size() != rows()) {
        throw std::invalid_argument("row selector length mismatch");
    }
    BitVec acc(cols_);
    for (size_t r : selector.set_indices()) {
        acc ^= rows_[r];
    }
    return acc;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c : rows_[r].set_indices()) {
            t.set(c, r, true);
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    for (const auto &r : rows_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

RrefResult rref(const BitMatrix &m) {
    RrefResult result{m, {}, BitMatrix::identity(m.rows())};
    auto &red = result.reduced;
    auto &tf = result.transform;
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); col++) {
        size_t found = m.rows();
        for (size_t r = pivot_row; r < m.rows(); r++) {
            if (red.get(r, col)) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        red.swap_rows(found, pivot_row);
        tf.swap_rows(found, pivot_row);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != pivot_row && red.get(r, col)) {
                red.row(r) ^= red.row(pivot_row);
                tf.row(r) ^= tf.row(pivot_row);
            }
        }
        result.pivots.push_back(col);
        pivot_row++;
    }
    return result;
}

void Gf2System::validate() const {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("right-hand side length does not match row count");
    }
    if (labels.size() != a.cols()) {
        throw std::invalid_argument("label count does not match column count");
    }
    for (size_t i = 0; i < labels.size(); i++) {
        for (size_t j = i + 1; j < labels.size(); j++) {
            if (labels[i] == labels[j]) {
                throw std::invalid_argument("duplicate column label " + labels[i]);
            }
        }
    }
}

SolveResult solve(const Gf2System &system) {
    system.validate();
    const auto reduced = rref(system.a);
    const size_t rank = reduced.pivots.size();
    const BitVec rhs = reduced.transform.apply(system.b);

    for (size_t r = rank; r < system.a.rows(); r++) {
        if (rhs.get(r)) {
            return Certificate{reduced.transform.row(r)};
        }
    }

    Solution sol{BitVec(system.a.cols()), {}};
    std::vector<bool> is_pivot(system.a.cols(), false);
    for (size_t r = 0; r < rank; r++) {
        sol.assignment.set(reduced.pivots[r], rhs.get(r));
        is_pivot[reduced.pivots[r]] = true;
    }
    for (size_t f = 0; f < system.a.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v = BitVec::unit(system.a.cols(), f);
        for (size_t r = 0; r < rank; r++) {
            if (reduced.reduced.get(r, f)) {
                v.set(reduced.pivots[r], true);
            }
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

bool verify_certificate(const Gf2System &system, const Certificate &cert) {
    if (cert.row_selector.size() != system.a.rows()) {
        return false;
    }
    return system.a.combine_rows(cert.row_selector).none() && cert.row_selector.dot(system.b);
}

bool satisfies(const Gf2System &system, const BitVec &assignment) {
    return assignment.size() == system.a.cols() && system.a.apply(assignment) == system.b;
}

std::vector<BitVec> left_nullspace(const BitMatrix &m) {
    const auto reduced = rref(m);
    std::vector<BitVec> basis;
    for (size_t r = reduced.pivots.size(); r < m.rows(); r++) {
        basis.push_back(reduced.transform.row(r));
    }
    return basis;
}

std::vector<BitVec> canonical_basis(const std::vector<BitVec> &vectors, size_t width) {
    const auto reduced = rref(BitMatrix::from_rows(vectors, width));
    std::vector<BitVec> basis;
    for (size_t r = 0; r < reduced.pivots.size(); r++) {
        basis.push_back(reduced.reduced.row(r));
    }
    return basis;
}

std::vector<BitVec> row_space_intersection(const std::vector<BitVec> &u, const std::vector<BitVec> &v, size_t width) {
    std::vector<BitVec> stacked = u;
    stacked.insert(stacked.end(), v.begin(), v.end());
    const auto stacked_matrix = BitMatrix::from_rows(stacked, width);
    const auto u_matrix = BitMatrix::from_rows(u, width);
    std::vector<BitVec> common;
    for (const auto &y : left_nullspace(stacked_matrix)) {
        // y = (a | b) with a·U = b·V; a·U lies in both spaces.
        common.push_back(u_matrix.combine_rows(y.slice(0, u.size())));
    }
    return canonical_basis(common, width);
}

std::pair<BitVec, BitVec> IncrementalBasis::reduce(const BitVec &v) const {
    if (v.size() != width_) {
        throw std::invalid_argument("basis vector width mismatch");
    }
    BitVec residual = v;
    BitVec combination(width_);
    for (size_t i = 0; i < reduced_.size(); i++) {
        if (residual.get(pivot_[i])) {
            residual ^= reduced_[i];
            combination ^= combination_[i];
        }
    }
    return {std::move(residual), std::move(combination)};
}

bool IncrementalBasis::add(const BitVec &v) {
    auto [residual, combination] = reduce(v);
    if (residual.none()) {
        return false;
    }
    combination.set(reduced_.size(), true);
    pivot_.push_back(residual.first_set());
    reduced_.push_back(std::move(residual));
    combination_.push_back(std::move(combination));
    return true;
}

std::optional<BitVec> IncrementalBasis::decompose(const BitVec &v) const {
    auto [residual, combination] = reduce(v);
    if (residual.any()) {
        return std::nullopt;
    }
    return combination.slice(0, rank());
}

BitVec TruthTable::input_at(size_t input_bits, size_t index) {
    BitVec input(input_bits);
    for (size_t j = 0; j < input_bits; j++) {
        input.set(j, (index >> (input_bits - 1 - j)) & 1);
    }
    return input;
}

size_t TruthTable::index_of(const BitVec &input) {
    size_t index = 0;
    for (size_t j = 0; j < input.size(); j++) {
        index = (index << 1) | (input.get(j) ? 1 : 0);
    }
    return index;
}

void TruthTable::validate() const {
    if (input_bits >= 63 || outputs.size() != (size_t{1} << input_bits)) {
        throw Error(ErrorKind::IncompleteTable, "expected 2^" + std::to_string(input_bits) + " outputs, got " +
                                                    std::to_string(outputs.size()));
    }
}

std::optional<AffineForm> fit_affine(const TruthTable &table) {
    table.validate();
    const size_t m = table.input_bits;
    AffineForm form{BitVec(m), table.outputs.get(0)};
    for (size_t j = 0; j < m; j++) {
        form.a.set(j, table.at(BitVec::unit(m, j)) != form.c);
    }
    for (size_t index = 0; index < table.outputs.size(); index++) {
        if (form.eval(TruthTable::input_at(m, index)) != table.outputs.get(index)) {
            return std::nullopt;
        }
    }
    return form;
}

}  // namespace contextua::gf2
