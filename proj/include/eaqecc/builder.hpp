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

#ifndef EAQECC_BUILDER_HPP
#define EAQECC_BUILDER_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/gf4.hpp"
#include "eaqecc/pauli.hpp"
#include "eaqecc/symplectic.hpp"

namespace eaqecc {

/// A classical [n, k] linear code over GF(4) given by its parity-check matrix.
class ClassicalCode {
   public:
    ClassicalCode(std::size_t n, std::size_t k, Gf4Matrix h, std::optional<std::size_t> d_claimed = std::nullopt)
        : n_(n), k_(k), h_(std::move(h)), d_claimed_(d_claimed) {
        if (k > n) {
            throw std::invalid_argument("code dimension k exceeds length n");
        }
        if (h_.rows() != n - k || (h_.rows() > 0 && h_.cols() != n)) {
            throw DimensionError(
                "parity-check matrix must be " + std::to_string(n - k) + " x " + std::to_string(n) + ", got " +
                std::to_string(h_.rows()) + " x " + std::to_string(h_.cols()));
        }
        if (h_.rank() != h_.rows()) {
            throw std::invalid_argument("parity-check rows are not linearly independent over GF(4)");
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    const Gf4Matrix &h() const noexcept { return h_; }
    std::optional<std::size_t> d_claimed() const noexcept { return d_claimed_; }

   private:
    std::size_t n_;
    std::size_t k_;
    Gf4Matrix h_;
    std::optional<std::size_t> d_claimed_;
};

/// The classical [4, 2, 3] code with rows (1, w, 1, 0) and (1, 1, 0, 1).
inline ClassicalCode golden_h4_code() {
    const Gf4 o = Gf4::zero;
    const Gf4 l = Gf4::one;
    const Gf4 w = Gf4::omega;
    return ClassicalCode(4, 2, Gf4Matrix::from_rows({{l, w, l, o}, {l, l, o, l}}), 3);
}

/// An entanglement-assisted code [[n, k_enc; c]] with s ancillas.
///
/// Qubits 0..n-1 belong to the sender. In `extended`, qubits n..n+c-1 are the
/// receiver's halves of the ebits, pair i using qubit n + i.
struct EaqeccCode {
    std::size_t n = 0;
    std::size_t c = 0;
    std::size_t s = 0;
    std::size_t k_enc = 0;
    GeneratorSet generators{0};
    GeneratorSet extended{0};
    Decomposition decomposition;
    std::optional<std::size_t> d;

    /// Set when built from a classical code.
    std::optional<std::size_t> classical_k;
    /// Generator count before dependent rows were dropped.
    std::size_t raw_generator_count = 0;

    bool rows_independent() const noexcept { return raw_generator_count == generators.size(); }

    /// 2k - n + c, the encoded-qubit count when every generated row is independent.
    std::optional<long long> k_formula() const {
        if (!classical_k) {
            return std::nullopt;
        }
        return 2 * static_cast<long long>(*classical_k) - static_cast<long long>(n) + static_cast<long long>(c);
    }
};

/// Rows of w*H mapped to Paulis, followed by rows of W*H.
inline GeneratorSet quaternary_to_stabilizer(const ClassicalCode &code) {
    GeneratorSet out(code.n());
    for (Gf4 scale : {Gf4::omega, Gf4::omega_bar}) {
        Gf4Matrix scaled = code.h().scaled(scale);
        for (std::size_t r = 0; r < scaled.rows(); ++r) {
            out.push_back(gf4_to_pauli(scaled.row(r)));
        }
    }
    return out;
}

/// Appends c receiver qubits: zbar_i gets Z and xbar_i gets X on qubit n + i,
/// isotropic generators get identity. Output order matches
/// Decomposition::all_generators.
inline GeneratorSet extend_generators(const Decomposition &d, std::size_t n) {
    if (d.n != n) {
        throw DimensionError("decomposition qubit count does not match n");
    }
    std::size_t c = d.c();
    GeneratorSet out(n + c);
    for (std::size_t i = 0; i < c; ++i) {
        out.push_back(d.pairs[i].zbar.tensor(PauliString::single(c, i, 'Z')));
        out.push_back(d.pairs[i].xbar.tensor(PauliString::single(c, i, 'X')));
    }
    for (const PauliString &g : d.isotropic) {
        out.push_back(g.tensor(PauliString(c)));
    }
    return out;
}

/// Builds a code from an arbitrary, possibly non-commuting, generator list.
inline EaqeccCode build_from_generators(const GeneratorSet &raw) {
    EaqeccCode code;
    code.n = raw.num_qubits();
    code.raw_generator_count = raw.size();
    code.generators = reduce_independent(raw);
    code.decomposition = gram_schmidt_decompose(code.generators);
    code.c = code.decomposition.c();
    code.s = code.decomposition.s();
    code.k_enc = code.n - code.c - code.s;
    code.extended = extend_generators(code.decomposition, code.n);
    return code;
}

/// quaternary_to_stabilizer, then reduce, decompose and extend.
inline EaqeccCode build_code(const ClassicalCode &classical) {
    EaqeccCode code = build_from_generators(quaternary_to_stabilizer(classical));
    code.classical_k = classical.k();
    return code;
}

/// Smallest weight of a non-identity element of the isotropic span, or
/// nullopt when s is zero or too large to enumerate.
inline std::optional<std::size_t> isotropic_min_weight(const EaqeccCode &code, std::size_t max_s = 24) {
    const auto &iso = code.decomposition.isotropic;
    if (iso.empty() || iso.size() > max_s) {
        return std::nullopt;
    }
    // Gray-code walk over all 2^s - 1 non-empty combinations.
    BitVector x(code.n);
    BitVector z(code.n);
    std::size_t best = code.n + 1;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << iso.size()); ++step) {
        std::size_t flip = static_cast<std::size_t>(std::countr_zero(step));
        x ^= iso[flip].x();
        z ^= iso[flip].z();
        best = std::min(best, (x | z).popcount());
    }
    return best;
}

/// Summary of a code's parameters.
struct CodeParameters {
    std::size_t n = 0;
    std::size_t k_enc = 0;
    std::size_t c = 0;
    std::size_t s = 0;
    std::optional<std::size_t> d;
    /// (k_enc - c) / n.
    double rate = 0;
    /// floor((d - 1) / 2) when d is known.
    std::optional<std::size_t> t;
    /// Whether the isotropic group holds a non-identity element lighter than d.
    std::optional<bool> degenerate;
    std::optional<long long> k_formula;
    bool rows_independent = true;

    /// "[[n,k;c]]" or "[[n,k,d;c]]".
    std::string label() const {
        std::string out = "[[" + std::to_string(n) + "," + std::to_string(k_enc);
        if (d) {
            out += "," + std::to_string(*d);
        }
        return out + ";" + std::to_string(c) + "]]";
    }
};

inline CodeParameters parameters(const EaqeccCode &code) {
    CodeParameters p;
    p.n = code.n;
    p.k_enc = code.k_enc;
    p.c = code.c;
    p.s = code.s;
    p.d = code.d;
    p.rate = code.n == 0 ? 0.0
                         : (static_cast<double>(code.k_enc) - static_cast<double>(code.c)) / static_cast<double>(code.n);
    if (code.d) {
        p.t = *code.d == 0 ? 0 : (*code.d - 1) / 2;
        if (code.s == 0) {
            p.degenerate = false;
        } else if (auto w = isotropic_min_weight(code)) {
            p.degenerate = *w < *code.d;
        }
    }
    p.k_formula = code.k_formula();
    p.rows_independent = code.rows_independent();
    return p;
}

}  // namespace eaqecc

#endif
