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

#ifndef EAQECC_SYMPLECTIC_HPP
#define EAQECC_SYMPLECTIC_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eaqecc/bit_vector.hpp"
#include "eaqecc/gf2.hpp"
#include "eaqecc/pauli.hpp"

namespace eaqecc {

/// A structural invariant that should have held did not.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Square or rectangular GF(2) matrix as a list of rows.
using BitMatrix = std::vector<BitVector>;

/// Ordered list of Pauli generators on a common qubit count.
class GeneratorSet {
   public:
    explicit GeneratorSet(std::size_t n) : n_(n) {}
    GeneratorSet(std::size_t n, std::vector<PauliString> gens) : n_(n), gens_(std::move(gens)) {
        for (const PauliString &g : gens_) {
            check(g);
        }
    }

    static GeneratorSet parse(std::initializer_list<std::string_view> texts) {
        std::vector<PauliString> gens;
        for (std::string_view t : texts) {
            gens.push_back(parse_pauli(t));
        }
        std::size_t n = gens.empty() ? 0 : gens.front().num_qubits();
        return GeneratorSet(n, std::move(gens));
    }

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }
    const PauliString &operator[](std::size_t i) const { return gens_.at(i); }
    const std::vector<PauliString> &generators() const noexcept { return gens_; }
    auto begin() const noexcept { return gens_.begin(); }
    auto end() const noexcept { return gens_.end(); }

    void push_back(PauliString p) {
        check(p);
        gens_.push_back(std::move(p));
    }

    BitMatrix symplectic_rows() const {
        BitMatrix rows;
        rows.reserve(gens_.size());
        for (const PauliString &g : gens_) {
            rows.push_back(g.symplectic_row());
        }
        return rows;
    }

    std::vector<std::string> strs() const {
        std::vector<std::string> out;
        for (const PauliString &g : gens_) {
            out.push_back(g.str());
        }
        return out;
    }

   private:
    void check(const PauliString &p) const {
        if (p.num_qubits() != n_) {
            throw DimensionError("generator qubit count does not match set");
        }
        if (p.is_identity_up_to_phase()) {
            throw std::invalid_argument("generator set may not contain the identity");
        }
    }

    std::size_t n_;
    std::vector<PauliString> gens_;
};

/// An anti-commuting generator pair.
struct SymplecticPair {
    PauliString zbar;
    PauliString xbar;
};

/// A generator set rewritten as c anti-commuting pairs plus s generators
/// that commute with everything listed.
struct Decomposition {
    std::size_t n = 0;
    std::vector<SymplecticPair> pairs;
    std::vector<PauliString> isotropic;

    std::size_t c() const noexcept { return pairs.size(); }
    std::size_t s() const noexcept { return isotropic.size(); }

    /// zbar_1, xbar_1, ..., zbar_c, xbar_c, then the isotropic generators.
    GeneratorSet all_generators() const {
        GeneratorSet out(n);
        for (const SymplecticPair &p : pairs) {
            out.push_back(p.zbar);
            out.push_back(p.xbar);
        }
        for (const PauliString &g : isotropic) {
            out.push_back(g);
        }
        return out;
    }

    GeneratorSet isotropic_set() const { return GeneratorSet(n, isotropic); }
};

/// Keeps, in input order, each generator that is independent of the ones
/// kept before it.
inline GeneratorSet reduce_independent(const GeneratorSet &g) {
    GeneratorSet out(g.num_qubits());
    Gf2Basis basis(2 * g.num_qubits(), g.size());
    for (const PauliString &p : g) {
        if (basis.add(p.symplectic_row())) {
            out.push_back(p);
        }
    }
    return out;
}

inline bool is_independent(const GeneratorSet &g) {
    BitMatrix rows = g.symplectic_rows();
    return gf2_rank(rows) == g.size();
}

/// Pairwise symplectic products; entry (i, j) is 1 iff g_i and g_j anti-commute.
inline BitMatrix commutation_matrix(const GeneratorSet &g) {
    BitMatrix m(g.size(), BitVector(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            bool anti = symplectic_product(g[i], g[j]);
            m[i].set(j, anti);
            m[j].set(i, anti);
        }
    }
    return m;
}

/// Symplectic Gram-Schmidt over the generator list.
///
/// Generators are visited in order. The current one is paired with the
/// first later generator it anti-commutes with; every other remaining
/// generator is then multiplied by the partner (if it anti-commutes with the
/// current one) and by the current one (if it anti-commutes with the
/// partner), which leaves it commuting with both. A generator with no
/// partner becomes isotropic. Requires independent input. Products are
/// stored with phase +1, so every output generator is Hermitian.
inline Decomposition gram_schmidt_decompose(const GeneratorSet &g) {
    if (!is_independent(g)) {
        throw std::invalid_argument("gram_schmidt_decompose requires independent generators");
    }
    Decomposition d;
    d.n = g.num_qubits();
    std::vector<PauliString> work = g.generators();
    std::vector<bool> used(work.size(), false);

    for (std::size_t i = 0; i < work.size(); ++i) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        std::size_t partner = work.size();
        for (std::size_t j = i + 1; j < work.size(); ++j) {
            if (!used[j] && symplectic_product(work[i], work[j])) {
                partner = j;
                break;
            }
        }
        if (partner == work.size()) {
            d.isotropic.push_back(work[i]);
            continue;
        }
        used[partner] = true;
        const PauliString &current = work[i];
        const PauliString &mate = work[partner];
        for (std::size_t j = i + 1; j < work.size(); ++j) {
            if (used[j]) {
                continue;
            }
            if (symplectic_product(work[j], current)) {
                work[j] = (work[j] * mate).with_phase(0);
            }
            if (symplectic_product(work[j], mate)) {
                work[j] = (work[j] * current).with_phase(0);
            }
        }
        d.pairs.push_back(SymplecticPair{current, mate});
    }
    return d;
}

/// True iff both sets generate the same group up to phase.
inline bool group_equal_up_to_phase(const GeneratorSet &a, const GeneratorSet &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("generator sets act on different qubit counts");
    }
    std::size_t dim = 2 * a.num_qubits();
    Gf2Basis basis_a(dim, a.size());
    for (const PauliString &p : a) {
        basis_a.add(p.symplectic_row());
    }
    Gf2Basis basis_b(dim, b.size());
    for (const PauliString &p : b) {
        basis_b.add(p.symplectic_row());
    }
    if (basis_a.rank() != basis_b.rank()) {
        return false;
    }
    for (const PauliString &p : b) {
        if (!basis_a.contains(p.symplectic_row())) {
            return false;
        }
    }
    return true;
}

/// Checks the pairing relations and independence of a decomposition.
/// Returns an empty string when valid, otherwise a description.
inline std::string decomposition_violation(const Decomposition &d) {
    GeneratorSet all(d.n);
    try {
        all = d.all_generators();
    } catch (const std::exception &e) {
        return e.what();
    }
    std::size_t pair_rows = 2 * d.c();
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            bool expected = i < pair_rows && i % 2 == 0 && j == i + 1;
            if (symplectic_product(all[i], all[j]) != expected) {
                return "generators " + std::to_string(i) + " and " + std::to_string(j) +
                       (expected ? " should anti-commute" : " should commute");
            }
        }
    }
    if (!is_independent(all)) {
        return "generators are not independent";
    }
    if (d.c() + d.s() > d.n) {
        return "c + s exceeds the qubit count";
    }
    return {};
}

/// 2n x 2n binary matrix acting on row vectors (x|z) from the right.
///
/// Row j (j < n) is the image of X_j, row n + j the image of Z_j.
class SymplecticMatrix {
   public:
    explicit SymplecticMatrix(std::size_t n) : n_(n), rows_(2 * n, BitVector(2 * n)) {}

    static SymplecticMatrix identity(std::size_t n) {
        SymplecticMatrix m(n);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            m.rows_[i].set(i, true);
        }
        return m;
    }

    std::size_t num_qubits() const noexcept { return n_; }
    const BitMatrix &rows() const noexcept { return rows_; }
    const BitVector &row(std::size_t i) const { return rows_.at(i); }
    void set_row(std::size_t i, BitVector v) {
        if (v.size() != 2 * n_) {
            throw DimensionError("symplectic matrix row has wrong length");
        }
        rows_.at(i) = std::move(v);
    }

    /// v * M.
    BitVector apply(const BitVector &v) const {
        if (v.size() != 2 * n_) {
            throw DimensionError("vector length does not match symplectic matrix");
        }
        BitVector out(2 * n_);
        for (std::size_t i = 0; i < 2 * n_; ++i) {
            if (v[i]) {
                out ^= rows_[i];
            }
        }
        return out;
    }

    /// Image of a Pauli up to phase.
    PauliString apply(const PauliString &p) const { return PauliString::from_symplectic(apply(p.symplectic_row())); }

    /// M J M^T over GF(2).
    BitMatrix form_image() const {
        BitMatrix out(2 * n_, BitVector(2 * n_));
        for (std::size_t i = 0; i < 2 * n_; ++i) {
            for (std::size_t j = 0; j < 2 * n_; ++j) {
                out[i].set(j, symplectic_product(rows_[i], rows_[j]));
            }
        }
        return out;
    }

    /// M J M^T == J.
    bool preserves_form() const { return form_image() == symplectic_form(n_); }

    /// J = [[0, I], [I, 0]].
    static BitMatrix symplectic_form(std::size_t n) {
        BitMatrix j(2 * n, BitVector(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            j[i].set(n + i, true);
            j[n + i].set(i, true);
        }
        return j;
    }

    bool operator==(const SymplecticMatrix &) const = default;

   private:
    std::size_t n_;
    BitMatrix rows_;
};

/// The canonical group generators in encoder slot layout: Z_i, X_i on the
/// first c qubits, then Z on the next s qubits. Order matches
/// Decomposition::all_generators.
inline GeneratorSet canonical_generators(std::size_t n, std::size_t c, std::size_t s) {
    if (c + s > n) {
        throw DimensionError("c + s exceeds the qubit count");
    }
    GeneratorSet out(n);
    for (std::size_t i = 0; i < c; ++i) {
        out.push_back(PauliString::single(n, i, 'Z'));
        out.push_back(PauliString::single(n, i, 'X'));
    }
    for (std::size_t i = 0; i < s; ++i) {
        out.push_back(PauliString::single(n, c + i, 'Z'));
    }
    return out;
}

/// Symplectic matrix sending each canonical generator to the matching
/// decomposition generator, completed deterministically on the remaining
/// slots. Throws InvariantViolation when the decomposition is inconsistent.
inline SymplecticMatrix find_encoding_symplectic(const Decomposition &d) {
    std::string violation = decomposition_violation(d);
    if (!violation.empty()) {
        throw InvariantViolation("inconsistent decomposition: " + violation);
    }
    std::size_t n = d.n;
    std::size_t dim = 2 * n;

    // (z-image, x-image) per slot, filled in slot order.
    std::vector<std::pair<BitVector, BitVector>> slots;
    for (const SymplecticPair &p : d.pairs) {
        slots.emplace_back(p.zbar.symplectic_row(), p.xbar.symplectic_row());
    }

    // Each isotropic generator needs a partner that anti-commutes with it and
    // commutes with every other listed vector. Constraint rows are the
    // symplectic duals (z|x) so that an ordinary dot product gives the
    // symplectic product.
    auto dual = [n](const BitVector &v) { return BitVector::concat(v.slice(n, n), v.slice(0, n)); };
    std::vector<BitVector> isotropic_rows;
    for (const PauliString &g : d.isotropic) {
        isotropic_rows.push_back(g.symplectic_row());
    }
    for (std::size_t j = 0; j < isotropic_rows.size(); ++j) {
        BitMatrix constraints;
        std::vector<bool> targets;
        for (const auto &[zi, xi] : slots) {
            constraints.push_back(dual(zi));
            targets.push_back(false);
            constraints.push_back(dual(xi));
            targets.push_back(false);
        }
        for (std::size_t k = j; k < isotropic_rows.size(); ++k) {
            constraints.push_back(dual(isotropic_rows[k]));
            targets.push_back(k == j);
        }
        BitVector rhs(targets.size());
        for (std::size_t t = 0; t < targets.size(); ++t) {
            rhs.set(t, targets[t]);
        }
        auto partner = gf2_solve(constraints, rhs, dim);
        if (!partner) {
            throw InvariantViolation("no symplectic partner exists for an isotropic generator");
        }
        slots.emplace_back(isotropic_rows[j], *partner);
    }

    // Remaining slots: symplectic Gram-Schmidt on unit vectors projected onto
    // the complement of everything placed so far.
    auto project = [&slots](BitVector v) {
        for (const auto &[a, b] : slots) {
            bool with_b = symplectic_product(v, b);
            bool with_a = symplectic_product(v, a);
            if (with_b) {
                v ^= a;
            }
            if (with_a) {
                v ^= b;
            }
        }
        return v;
    };
    // Z-type unit vectors are tried first for the z-image and X-type first
    // for the x-image, so canonical input completes to the identity.
    while (slots.size() < n) {
        BitVector first(dim);
        for (std::size_t i = 0; i < dim && first.none(); ++i) {
            BitVector e(dim);
            e.set((i + n) % dim, true);
            first = project(e);
        }
        BitVector second(dim);
        for (std::size_t i = 0; i < dim && first.any(); ++i) {
            BitVector e(dim);
            e.set(i, true);
            BitVector candidate = project(e);
            if (symplectic_product(first, candidate)) {
                second = candidate;
                break;
            }
        }
        if (first.none() || second.none()) {
            throw InvariantViolation("symplectic completion failed");
        }
        slots.emplace_back(std::move(first), std::move(second));
    }

    SymplecticMatrix m(n);
    for (std::size_t q = 0; q < n; ++q) {
        m.set_row(n + q, slots[q].first);
        m.set_row(q, slots[q].second);
    }
    if (!m.preserves_form()) {
        throw InvariantViolation("constructed matrix does not preserve the symplectic form");
    }
    return m;
}

}  // namespace eaqecc

#endif
