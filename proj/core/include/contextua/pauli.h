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

#ifndef CONTEXTUA_PAULI_H
#define CONTEXTUA_PAULI_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "contextua/bitvec.h"

namespace contextua {

/// An n-qubit Pauli operator i^phase_exp · ⊗_k X^{x_k} Z^{z_k}.
///
/// Tensor factor k acts on qubit k; qubit 0 is the leftmost letter of the
/// string form. Only Hermitian operators (phase_exp ≡ x·z mod 2) have a
/// string form, and only Hermitian operators are meant to leave this module.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// Identity on `width` qubits.
    explicit PauliOperator(size_t width);
    PauliOperator(BitVec x_bits, BitVec z_bits, uint8_t phase_exp);

    /// Grammar: `sign? [IXYZ]+` with sign in {+, -}.
    static PauliOperator parse(std::string_view text);
    /// Single-qubit factor `letter` on `qubit` of a `width`-qubit register.
    static PauliOperator single(size_t width, size_t qubit, char letter);

    size_t width() const noexcept {
        return x_.size();
    }
    const BitVec &x_bits() const noexcept {
        return x_;
    }
    const BitVec &z_bits() const noexcept {
        return z_;
    }
    uint8_t phase_exp() const noexcept {
        return phase_;
    }

    /// Number of Y factors, i.e. x·z over the integers.
    size_t y_count() const noexcept;
    bool is_hermitian() const noexcept;
    /// True when x = z = 0 (any phase).
    bool is_scalar() const noexcept;
    /// 0 for +P, 1 for -P. Requires a Hermitian operator.
    bool sign_bit() const;
    /// The positive representative of {±P}. Requires a Hermitian operator.
    PauliOperator positive() const;
    PauliOperator negated() const;
    /// Symplectic vector [x | z] of length 2·width.
    BitVec symplectic() const;
    /// Qubits carrying a non-identity factor.
    std::vector<size_t> support() const;
    char letter(size_t qubit) const;

    /// Signed string form, e.g. "+XYZ". Throws for non-Hermitian operators.
    std::string str() const;

    friend PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);
    bool operator==(const PauliOperator &other) const = default;
    /// Width, then letters qubit by qubit with I < X < Y < Z, then phase.
    std::strong_ordering operator<=>(const PauliOperator &other) const;

   private:
    BitVec x_;
    BitVec z_;
    uint8_t phase_ = 0;
};

PauliOperator parse_pauli(std::string_view text);
std::string format_pauli(const PauliOperator &p);
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
bool commutes(const PauliOperator &p, const PauliOperator &q);

/// Tensor product p ⊗ q (p on the leading qubits).
PauliOperator tensor(const PauliOperator &p, const PauliOperator &q);

}  // namespace contextua

#endif
