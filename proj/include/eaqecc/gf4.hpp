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

#ifndef EAQECC_GF4_HPP
#define EAQECC_GF4_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/bit_vector.hpp"

namespace eaqecc {

/// Element of the four-element field {0, 1, w, W} with W = w^2 = w + 1.
///
/// Stored as the coefficient pair (a, b) of a + b*w packed into two bits, so
/// field addition is XOR of the raw values.
class Gf4 {
   public:
    static const Gf4 zero;
    static const Gf4 one;
    static const Gf4 omega;
    static const Gf4 omega_bar;

    constexpr Gf4() = default;

    /// `raw` in [0, 4): bit 0 is the coefficient of 1, bit 1 of w.
    static constexpr Gf4 from_raw(std::uint8_t raw) {
        if (raw > 3) {
            throw std::invalid_argument("GF(4) raw value out of range");
        }
        return Gf4(raw);
    }
    constexpr std::uint8_t raw() const noexcept { return raw_; }

    constexpr bool is_zero() const noexcept { return raw_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) noexcept { return Gf4(a.raw_ ^ b.raw_); }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) noexcept { return a + b; }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) noexcept {
        if (a.is_zero() || b.is_zero()) {
            return Gf4();
        }
        return from_log((a.log() + b.log()) % 3);
    }
    Gf4 &operator+=(Gf4 b) noexcept { return *this = *this + b; }
    Gf4 &operator*=(Gf4 b) noexcept { return *this = *this * b; }

    Gf4 inverse() const {
        if (is_zero()) {
            throw std::domain_error("zero has no inverse in GF(4)");
        }
        return from_log((3 - log()) % 3);
    }

    /// Frobenius conjugation x -> x^2 (swaps w and W).
    constexpr Gf4 conj() const noexcept { return *this * *this; }

    /// Absolute trace x + x^2, always 0 or 1.
    constexpr Gf4 trace() const noexcept { return *this + conj(); }

    friend constexpr bool operator==(Gf4, Gf4) = default;

    /// Token form used by code files: 0, 1, w, W.
    char token() const noexcept { return kTokens[raw_]; }
    static Gf4 from_token(char c) {
        for (std::uint8_t r = 0; r < 4; ++r) {
            if (kTokens[r] == c) {
                return Gf4(r);
            }
        }
        throw std::invalid_argument(std::string("invalid GF(4) token '") + c + "'");
    }

   private:
    static constexpr std::array<char, 4> kTokens{'0', '1', 'w', 'W'};

    constexpr explicit Gf4(std::uint8_t raw) : raw_(raw) {}

    // Discrete log base w: 1 -> 0, w -> 1, W -> 2.
    constexpr int log() const noexcept { return raw_ == 1 ? 0 : raw_ == 2 ? 1 : 2; }
    static constexpr Gf4 from_log(int e) noexcept { return Gf4(e == 0 ? 1 : e == 1 ? 2 : 3); }

    std::uint8_t raw_ = 0;
};

inline constexpr Gf4 Gf4::zero = Gf4(0);
inline constexpr Gf4 Gf4::one = Gf4(1);
inline constexpr Gf4 Gf4::omega = Gf4(2);
inline constexpr Gf4 Gf4::omega_bar = Gf4(3);

/// Dense rows x cols matrix over GF(4).
class Gf4Matrix {
   public:
    Gf4Matrix() = default;
    Gf4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Gf4Matrix from_rows(const std::vector<std::vector<Gf4>> &rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Gf4Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) {
                throw DimensionError("ragged GF(4) matrix rows");
            }
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Gf4 &operator()(std::size_t r, std::size_t c) { return data_.at(index(r, c)); }
    Gf4 operator()(std::size_t r, std::size_t c) const { return data_.at(index(r, c)); }

    std::vector<Gf4> row(std::size_t r) const {
        std::vector<Gf4> out(cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            out[c] = (*this)(r, c);
        }
        return out;
    }

    /// Every entry multiplied by `s`.
    Gf4Matrix scaled(Gf4 s) const {
        Gf4Matrix out = *this;
        for (Gf4 &v : out.data_) {
            v *= s;
        }
        return out;
    }

    std::size_t rank() const {
        Gf4Matrix m = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && m(pivot, col).is_zero()) {
                ++pivot;
            }
            if (pivot == rows_) {
                continue;
            }
            for (std::size_t c = 0; c < cols_; ++c) {
                std::swap(m(pivot, c), m(rank, c));
            }
            Gf4 inv = m(rank, col).inverse();
            for (std::size_t c = 0; c < cols_; ++c) {
                m(rank, c) *= inv;
            }
            for (std::size_t r = 0; r < rows_; ++r) {
                Gf4 factor = m(r, col);
                if (r != rank && !factor.is_zero()) {
                    for (std::size_t c = 0; c < cols_; ++c) {
                        m(r, c) += factor * m(rank, c);
                    }
                }
            }
            ++rank;
        }
        return rank;
    }

    bool operator==(const Gf4Matrix &) const = default;

   private:
    std::size_t index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) {
            throw std::out_of_range("GF(4) matrix index out of range");
        }
        return r * cols_ + c;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gf4> data_;
};

/// Hermitian inner product sum_j a_j * conj(b_j).
inline Gf4 hermitian_inner(const std::vector<Gf4> &a, const std::vector<Gf4> &b) {
    if (a.size() != b.size()) {
        throw DimensionError("GF(4) vector length mismatch");
    }
    Gf4 acc;
    for (std::size_t j = 0; j < a.size(); ++j) {
        acc += a[j] * b[j].conj();
    }
    return acc;
}

/// Trace inner product tr(sum_j a_j * conj(b_j)); equals the symplectic
/// product of the corresponding Pauli operators.
inline bool trace_inner(const std::vector<Gf4> &a, const std::vector<Gf4> &b) {
    return hermitian_inner(a, b).trace() == Gf4::one;
}

}  // namespace eaqecc

#endif
