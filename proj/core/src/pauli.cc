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

#include "contextua/pauli.h"

#include <stdexcept>

#include "contextua/error.h"

namespace contextua {

namespace {

int letter_rank(bool x, bool z) {
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
}

void check_widths(const PauliOperator &p, const PauliOperator &q) {
    if (p.width() != q.width()) {
        throw Error(ErrorKind::WidthMismatch,
                    "operands act on " + std::to_string(p.width()) + " and " + std::to_string(q.width()) + " qubits");
    }
}

}  // namespace

PauliOperator::PauliOperator(size_t width) : x_(width), z_(width), phase_(0) {
}

PauliOperator::PauliOperator(BitVec x_bits, BitVec z_bits, uint8_t phase_exp)
    : x_(std::move(x_bits)), z_(std::move(z_bits)), phase_(phase_exp & 3) {
    if (x_.size() != z_.size()) {
        throw Error(ErrorKind::WidthMismatch, "x and z bit vectors differ in length");
    }
}

PauliOperator PauliOperator::parse(std::string_view text) {
    uint8_t phase = 0;
    std::string_view body = text;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        phase = body.front() == '-' ? 2 : 0;
        body.remove_prefix(1);
    }
    if (body.empty()) {
        throw Error(ErrorKind::Parse, "empty Pauli string '" + std::string(text) + "'");
    }
    BitVec x(body.size());
    BitVec z(body.size());
    for (size_t k = 0; k < body.size(); k++) {
        switch (body[k]) {
            case 'I':
                break;
            case 'X':
                x.set(k, true);
                break;
            case 'Z':
                z.set(k, true);
                break;
            case 'Y':
                // Y = i·X·Z.
                x.set(k, true);
                z.set(k, true);
                phase++;
                break;
            default:
                throw Error(ErrorKind::Parse,
                            "unexpected character '" + std::string(1, body[k]) + "' in Pauli string '" +
                                std::string(text) + "'");
        }
    }
    return PauliOperator(std::move(x), std::move(z), phase);
}

PauliOperator PauliOperator::single(size_t width, size_t qubit, char letter) {
    if (qubit >= width) {
        throw std::out_of_range("qubit index out of range");
    }
    std::string text(width, 'I');
    text[qubit] = letter;
    return parse(text);
}

size_t PauliOperator::y_count() const noexcept {
    return (x_ & z_).popcount();
}

bool PauliOperator::is_hermitian() const noexcept {
    return ((phase_ + y_count()) & 1) == 0;
}

bool PauliOperator::is_scalar() const noexcept {
    return x_.none() && z_.none();
}

bool PauliOperator::sign_bit() const {
    if (!is_hermitian()) {
        throw Error(ErrorKind::NonHermitian, "sign of a non-Hermitian Pauli operator");
    }
    return ((phase_ + 4 - (y_count() & 3)) & 3) == 2;
}

PauliOperator PauliOperator::positive() const {
    if (!is_hermitian()) {
        throw Error(ErrorKind::NonHermitian, "positive representative of a non-Hermitian Pauli operator");
    }
    return PauliOperator(x_, z_, static_cast<uint8_t>(y_count() & 3));
}

PauliOperator PauliOperator::negated() const {
    return PauliOperator(x_, z_, static_cast<uint8_t>(phase_ + 2));
}

BitVec PauliOperator::symplectic() const {
    return x_.concat(z_);
}

std::vector<size_t> PauliOperator::support() const {
    BitVec either = x_;
    for (size_t k : z_.set_indices()) {
        either.set(k, true);
    }
    return either.set_indices();
}

char PauliOperator::letter(size_t qubit) const {
    return "IXYZ"[letter_rank(x_.get(qubit), z_.get(qubit))];
}

std::string PauliOperator::str() const {
    if (!is_hermitian()) {
        throw Error(ErrorKind::NonHermitian, "only Hermitian Pauli operators have a signed string form");
    }
    std::string result(1, sign_bit() ? '-' : '+');
    for (size_t k = 0; k < width(); k++) {
        result.push_back(letter(k));
    }
    return result;
}

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    check_widths(p, q);
    // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1·x2} X^{x1+x2} Z^{z1+z2}
    uint8_t phase = p.phase_ + q.phase_ + (p.z_.dot(q.x_) ? 2 : 0);
    return PauliOperator(p.x_ ^ q.x_, p.z_ ^ q.z_, phase);
}

std::strong_ordering PauliOperator::operator<=>(const PauliOperator &other) const {
    if (auto c = width() <=> other.width(); c != 0) {
        return c;
    }
    for (size_t k = 0; k < width(); k++) {
        int a = letter_rank(x_.get(k), z_.get(k));
        int b = letter_rank(other.x_.get(k), other.z_.get(k));
        if (a != b) {
            return a <=> b;
        }
    }
    return phase_ <=> other.phase_;
}

PauliOperator parse_pauli(std::string_view text) {
    return PauliOperator::parse(text);
}

std::string format_pauli(const PauliOperator &p) {
    return p.str();
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    return p * q;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    check_widths(p, q);
    return p.x_bits().dot(q.z_bits()) == p.z_bits().dot(q.x_bits());
}

PauliOperator tensor(const PauliOperator &p, const PauliOperator &q) {
    return PauliOperator(p.x_bits().concat(q.x_bits()), p.z_bits().concat(q.z_bits()),
                         static_cast<uint8_t>(p.phase_exp() + q.phase_exp()));
}

}  // namespace contextua
