// Copyright 2026 The EAQECC Authors
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

#ifndef EAQECC_BIT_VECTOR_HPP
#define EAQECC_BIT_VECTOR_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eaqecc {

/// Thrown when operands disagree on length or qubit count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparison, hashing and popcount need no masking.
class BitVector {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t num_bits) : num_bits_(num_bits), words_((num_bits + kWordBits - 1) / kWordBits, 0) {}

    static BitVector from_string(const std::string &bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                v.set(i, true);
            } else if (bits[i] != '0') {
                throw std::invalid_argument("bit string may only contain '0' and '1'");
            }
        }
        return v;
    }

    std::size_t size() const noexcept { return num_bits_; }
    std::size_t num_words() const noexcept { return words_.size(); }
    const std::vector<Word> &words() const noexcept { return words_; }

    bool operator[](std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

    void set(std::size_t i, bool value) noexcept {
        Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    BitVector &operator^=(const BitVector &other) {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    BitVector &operator&=(const BitVector &other) {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }
    BitVector &operator|=(const BitVector &other) {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        a |= b;
        return a;
    }

    std::size_t popcount() const noexcept {
        std::size_t total = 0;
        for (Word w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }

    bool any() const noexcept {
        for (Word w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// Parity of the bitwise AND, i.e. the standard dot product over GF(2).
    bool dot(const BitVector &other) const {
        check_same_size(other);
        Word acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) {
                return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return num_bits_;
    }

    /// Concatenation `a` followed by `b`.
    static BitVector concat(const BitVector &a, const BitVector &b) {
        BitVector out(a.size() + b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out.set(i, a[i]);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            out.set(a.size() + i, b[i]);
        }
        return out;
    }

    /// Bits [start, start + len).
    BitVector slice(std::size_t start, std::size_t len) const {
        if (start + len > num_bits_) {
            throw DimensionError("slice out of range");
        }
        BitVector out(len);
        for (std::size_t i = 0; i < len; ++i) {
            out.set(i, (*this)[start + i]);
        }
        return out;
    }

    /// Copy with `len` zero bits appended.
    BitVector padded(std::size_t len) const {
        BitVector out(num_bits_ + len);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            out.words_[w] = words_[w];
        }
        return out;
    }

    std::string str() const {
        std::string out(num_bits_, '0');
        for (std::size_t i = 0; i < num_bits_; ++i) {
            if ((*this)[i]) {
                out[i] = '1';
            }
        }
        return out;
    }

    bool operator==(const BitVector &other) const = default;

    /// Lexicographic order on the bit sequence, index 0 most significant.
    bool lex_less(const BitVector &other) const {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word diff = words_[w] ^ other.words_[w];
            if (diff) {
                Word lowest = diff & (~diff + 1);
                return (other.words_[w] & lowest) != 0;
            }
        }
        return false;
    }

    std::size_t hash() const noexcept {
        std::size_t h = num_bits_;
        for (Word w : words_) {
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    void check_same_size(const BitVector &other) const {
        if (other.num_bits_ != num_bits_) {
            throw DimensionError(
                "bit vector length mismatch: " + std::to_string(num_bits_) + " vs " + std::to_string(other.num_bits_));
        }
    }

    std::size_t num_bits_ = 0;
    std::vector<Word> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector &v) const noexcept { return v.hash(); }
};

}  // namespace eaqecc

#endif
