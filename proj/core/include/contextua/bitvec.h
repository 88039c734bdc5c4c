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

#ifndef CONTEXTUA_BITVEC_H
#define CONTEXTUA_BITVEC_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace contextua {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `size()` in the last word are kept at zero so that word-wise
/// equality, ordering and popcounts are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    /// Parses a string of '0'/'1' characters; index 0 is the first character.
    static BitVec from_string(std::string_view bits);
    static BitVec unit(size_t num_bits, size_t index);
    /// Low `num_bits` bits of `value`, bit j of the integer becoming index j.
    static BitVec from_uint(size_t num_bits, uint64_t value);

    size_t size() const noexcept {
        return num_bits_;
    }
    bool empty() const noexcept {
        return num_bits_ == 0;
    }

    bool get(size_t index) const;
    void set(size_t index, bool value);
    void flip(size_t index);
    bool operator[](size_t index) const {
        return get(index);
    }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        a &= b;
        return a;
    }

    /// Parity of the bitwise AND, i.e. the GF(2) inner product.
    bool dot(const BitVec &other) const;
    size_t popcount() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept {
        return !any();
    }
    /// Index of the lowest set bit, or size() if none.
    size_t first_set() const noexcept;
    std::vector<size_t> set_indices() const;

    /// Concatenation [this | tail].
    BitVec concat(const BitVec &tail) const;
    BitVec slice(size_t begin, size_t end) const;

    std::span<const uint64_t> words() const noexcept {
        return words_;
    }

    std::string str() const;

    bool operator==(const BitVec &other) const = default;
    /// Orders by length, then lexicographically by index (index 0 most significant).
    std::strong_ordering operator<=>(const BitVec &other) const;

   private:
    void check_index(size_t index) const;
    void check_same_size(const BitVec &other) const;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace contextua

#endif
