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

#include "contextua/bitvec.h"

#include <bit>
#include <stdexcept>

namespace contextua {

namespace {

constexpr size_t kWordBits = 64;

size_t word_count(size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_(word_count(num_bits), 0) {
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            result.set(k, true);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return result;
}

BitVec BitVec::unit(size_t num_bits, size_t index) {
    BitVec result(num_bits);
    result.set(index, true);
    return result;
}

BitVec BitVec::from_uint(size_t num_bits, uint64_t value) {
    BitVec result(num_bits);
    for (size_t k = 0; k < num_bits && k < kWordBits; k++) {
        result.set(k, (value >> k) & 1);
    }
    return result;
}

void BitVec::check_index(size_t index) const {
    if (index >= num_bits_) {
        throw std::out_of_range("bit index " + std::to_string(index) + " out of range " + std::to_string(num_bits_));
    }
}

void BitVec::check_same_size(const BitVec &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
}

bool BitVec::get(size_t index) const {
    check_index(index);
    return (words_[index / kWordBits] >> (index % kWordBits)) & 1;
}

void BitVec::set(size_t index, bool value) {
    check_index(index);
    uint64_t mask = uint64_t{1} << (index % kWordBits);
    if (value) {
        words_[index / kWordBits] |= mask;
    } else {
        words_[index / kWordBits] &= ~mask;
    }
}

void BitVec::flip(size_t index) {
    check_index(index);
    words_[index / kWordBits] ^= uint64_t{1} << (index % kWordBits);
}

BitVec &BitVec::operator^=(const BitVec &other) {
    check_same_size(other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    check_same_size(other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

bool BitVec::dot(const BitVec &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BitVec::popcount() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const noexcept {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::first_set() const noexcept {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * kWordBits + std::countr_zero(words_[w]);
        }
    }
    return num_bits_;
}

std::vector<size_t> BitVec::set_indices() const {
    std::vector<size_t> result;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t word = words_[w];
        while (word) {
            result.push_back(w * kWordBits + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return result;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec result(num_bits_ + tail.num_bits_);
    for (size_t k : set_indices()) {
        result.set(k, true);
    }
    for (size_t k : tail.set_indices()) {
        result.set(num_bits_ + k, true);
    }
    return result;
}

BitVec BitVec::slice(size_t begin, size_t end) const {
    if (begin > end || end > num_bits_) {
        throw std::out_of_range("bad bit vector slice");
    }
    BitVec result(end - begin);
    for (size_t k = begin; k < end; k++) {
        if (get(k)) {
            result.set(k - begin, true);
        }
    }
    return result;
}

std::string BitVec::str() const {
    std::string result(num_bits_, '0');
    for (size_t k : set_indices()) {
        result[k] = '1';
    }
    return result;
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t diff = words_[w] ^ other.words_[w];
        if (diff) {
            // Lowest differing index decides; a one there sorts later.
            uint64_t mask = diff & (~diff + 1);
            return (words_[w] & mask) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace contextua
