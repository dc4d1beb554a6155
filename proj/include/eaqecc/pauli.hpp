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

#ifndef EAQECC_PAULI_HPP
#define EAQECC_PAULI_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eaqecc/bit_vector.hpp"
#include "eaqecc/gf4.hpp"

namespace eaqecc {

/// Malformed text input. `position` is the 0-based offending character.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &what, std::size_t position) : std::invalid_argument(what), position(position) {}
    std::size_t position;
};

/// An n-qubit Pauli operator i^phase_exp * P_0 (x) ... (x) P_{n-1}.
///
/// Qubit j carries X if x_j only, Z if z_j only, Y if both, where Y = i*X*Z.
/// The (x|z) part is phase free; phase_exp is the global power of i.
class PauliString {
   public:
    PauliString() = default;

    /// Identity on `n` qubits.
    explicit PauliString(std::size_t n) : x_(n), z_(n) {}

    PauliString(BitVector x, BitVector z, std::uint8_t phase_exp = 0)
        : x_(std::move(x)), z_(std::move(z)), phase_exp_(phase_exp & 3) {
        if (x_.size() != z_.size()) {
            throw DimensionError("x and z parts must have equal length");
        }
    }

    /// From a 2n-bit row laid out as (x_0..x_{n-1} | z_0..z_{n-1}).
    static PauliString from_symplectic(const BitVector &row, std::uint8_t phase_exp = 0) {
        if (row.size() % 2 != 0) {
            throw DimensionError("symplectic row must have even length");
        }
        std::size_t n = row.size() / 2;
        return PauliString(row.slice(0, n), row.slice(n, n), phase_exp);
    }

    /// A single Pauli ('X', 'Y' or 'Z') on qubit `q` of `n`.
    static PauliString single(std::size_t n, std::size_t q, char pauli) {
        if (q >= n) {
            throw DimensionError("qubit index out of range");
        }
        PauliString p(n);
        p.set(q, pauli);
        return p;
    }

    std::size_t num_qubits() const noexcept { return x_.size(); }
    const BitVector &x() const noexcept { return x_; }
    const BitVector &z() const noexcept { return z_; }
    std::uint8_t phase_exp() const noexcept { return phase_exp_; }

    /// Number of qubits acted on non-trivially.
    std::size_t weight() const { return (x_ | z_).popcount(); }
    bool is_identity_up_to_phase() const noexcept { return x_.none() && z_.none(); }

    /// 'I', 'X', 'Y' or 'Z' on qubit q.
    char at(std::size_t q) const {
        if (q >= num_qubits()) {
            throw DimensionError("qubit index out of range");
        }
        return "IXZY"[x_[q] + 2 * z_[q]];
    }

    BitVector symplectic_row() const { return BitVector::concat(x_, z_); }

    PauliString with_phase(std::uint8_t phase_exp) const {
        PauliString out = *this;
        out.phase_exp_ = phase_exp & 3;
        return out;
    }

    bool equal_up_to_phase(const PauliString &other) const { return x_ == other.x_ && z_ == other.z_; }

    /// Exact equality, phase included.
    bool operator==(const PauliString &other) const = default;

    /// Qubits [start, start + len) with phase zero.
    PauliString restrict_to(std::size_t start, std::size_t len) const {
        return PauliString(x_.slice(start, len), z_.slice(start, len));
    }

    /// Tensor product this (x) other; other's qubits follow this one's.
    PauliString tensor(const PauliString &other) const {
        return PauliString(
            BitVector::concat(x_, other.x_), BitVector::concat(z_, other.z_), (phase_exp_ + other.phase_exp_) & 3);
    }

    std::string str() const;

   private:
    void set(std::size_t q, char pauli) {
        switch (pauli) {
            case 'I':
                x_.set(q, false);
                z_.set(q, false);
                break;
            case 'X':
                x_.set(q, true);
                z_.set(q, false);
                break;
            case 'Y':
                x_.set(q, true);
                z_.set(q, true);
                break;
            case 'Z':
                x_.set(q, false);
                z_.set(q, true);
                break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli letter '") + pauli + "'");
        }
    }

    friend PauliString parse_pauli(std::string_view text);

    BitVector x_;
    BitVector z_;
    std::uint8_t phase_exp_ = 0;
};

inline void check_same_qubits(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli qubit count mismatch: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

/// Exact group product a*b, phase included.
inline PauliString multiply(const PauliString &a, const PauliString &b) {
    check_same_qubits(a, b);
    const auto &ax = a.x().words();
    const auto &az = a.z().words();
    const auto &bx = b.x().words();
    const auto &bz = b.z().words();

    // Per qubit: XY = iZ, YZ = iX, ZX = iY contribute +1; reversed orders -1.
    int exponent = a.phase_exp() + b.phase_exp();
    for (std::size_t w = 0; w < ax.size(); ++w) {
        auto a_x = ax[w] & ~az[w];
        auto a_y = ax[w] & az[w];
        auto a_z = ~ax[w] & az[w];
        auto b_x = bx[w] & ~bz[w];
        auto b_y = bx[w] & bz[w];
        auto b_z = ~bx[w] & bz[w];
        auto plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        auto minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
        exponent += std::popcount(plus) - std::popcount(minus);
    }
    return PauliString(a.x() ^ b.x(), a.z() ^ b.z(), static_cast<std::uint8_t>(((exponent % 4) + 4) % 4));
}

inline PauliString operator*(const PauliString &a, const PauliString &b) { return multiply(a, b); }

/// <a.x, b.z> + <a.z, b.x> mod 2: false when a and b commute.
inline bool symplectic_product(const PauliString &a, const PauliString &b) {
    check_same_qubits(a, b);
    return a.x().dot(b.z()) != a.z().dot(b.x());
}

/// Symplectic product of two (x|z) rows of equal even length.
inline bool symplectic_product(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size() || a.size() % 2 != 0) {
        throw DimensionError("symplectic rows must have equal even length");
    }
    std::size_t n = a.size() / 2;
    bool acc = false;
    for (std::size_t j = 0; j < n; ++j) {
        acc ^= (a[j] && b[n + j]) != (a[n + j] && b[j]);
    }
    return acc;
}

/// Canonical text: optional phase prefix ("", "i", "-", "-i") then one letter
/// per qubit.
inline std::string format_pauli(const PauliString &p) {
    static constexpr const char *kPrefix[] = {"", "i", "-", "-i"};
    std::string out = kPrefix[p.phase_exp()];
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        out.push_back(p.at(q));
    }
    return out;
}

inline std::string PauliString::str() const { return format_pauli(*this); }

inline std::ostream &operator<<(std::ostream &out, const PauliString &p) { return out << format_pauli(p); }

/// Parses "[+|-][i]<IXYZ>*". The letters must be upper case.
inline PauliString parse_pauli(std::string_view text) {
    std::size_t pos = 0;
    std::uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        ++pos;
    }
    std::size_t n = text.size() - pos;
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) {
        char c = text[pos + q];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError(
                "invalid character '" + std::string(1, c) + "' at position " + std::to_string(pos + q) +
                    " in Pauli string \"" + std::string(text) + "\"",
                pos + q);
        }
        p.set(q, c);
    }
    p.phase_exp_ = phase;
    return p;
}

/// Per-qubit map I -> 0, X -> W, Y -> 1, Z -> w. Phase is dropped.
inline std::vector<Gf4> pauli_to_gf4(const PauliString &p) {
    std::vector<Gf4> out(p.num_qubits());
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        switch (p.at(q)) {
            case 'X':
                out[q] = Gf4::omega_bar;
                break;
            case 'Y':
                out[q] = Gf4::one;
                break;
            case 'Z':
                out[q] = Gf4::omega;
                break;
            default:
                break;
        }
    }
    return out;
}

/// Inverse of pauli_to_gf4, with phase_exp = 0.
inline PauliString gf4_to_pauli(const std::vector<Gf4> &v) {
    BitVector x(v.size());
    BitVector z(v.size());
    for (std::size_t q = 0; q < v.size(); ++q) {
        if (v[q] == Gf4::omega_bar || v[q] == Gf4::one) {
            x.set(q, true);
        }
        if (v[q] == Gf4::omega || v[q] == Gf4::one) {
            z.set(q, true);
        }
    }
    return PauliString(std::move(x), std::move(z));
}

}  // namespace eaqecc

#endif
