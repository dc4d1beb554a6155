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

#ifndef EAQECC_GF2_HPP
#define EAQECC_GF2_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eaqecc/bit_vector.hpp"

namespace eaqecc {

/// Incrementally built row basis over GF(2).
///
/// Rows are kept in insertion order, each reduced against every earlier
/// row, so reducing a query against the rows in order clears every pivot.
/// Each stored row remembers which accepted inputs it is the sum of, which
/// lets `express` write a vector as a combination of the accepted inputs.
class Gf2Basis {
   public:
    Gf2Basis(std::size_t dim, std::size_t capacity) : dim_(dim), capacity_(capacity) {}
    explicit Gf2Basis(std::size_t dim) : Gf2Basis(dim, dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds `v` if it is outside the current span. Returns true if added.
    bool add(const BitVector &v) {
        check_dim(v);
        BitVector reduced = v;
        BitVector combo(capacity_);
        reduce(reduced, combo);
        if (reduced.none()) {
            return false;
        }
        if (rows_.size() == capacity_) {
            throw DimensionError("Gf2Basis capacity exceeded");
        }
        combo.flip(rows_.size());
        std::size_t pivot = reduced.first_set();
        rows_.push_back(Row{std::move(reduced), std::move(combo), pivot});
        return true;
    }

    bool contains(const BitVector &v) const {
        check_dim(v);
        BitVector reduced = v;
        BitVector combo(capacity_);
        reduce(reduced, combo);
        return reduced.none();
    }

    /// Coefficients (indexed by acceptance order) summing accepted inputs to
    /// `v`, or nullopt when `v` is outside the span.
    std::optional<BitVector> express(const BitVector &v) const {
        check_dim(v);
        BitVector reduced = v;
        BitVector combo(capacity_);
        reduce(reduced, combo);
        if (reduced.any()) {
            return std::nullopt;
        }
        return combo.slice(0, rows_.size());
    }

   private:
    struct Row {
        BitVector bits;
        BitVector combo;
        std::size_t pivot;
    };

    void reduce(BitVector &v, BitVector &combo) const {
        for (const Row &row : rows_) {
            if (v[row.pivot]) {
                v ^= row.bits;
                combo ^= row.combo;
            }
        }
    }

    void check_dim(const BitVector &v) const {
        if (v.size() != dim_) {
            throw DimensionError("vector length does not match basis dimension");
        }
    }

    std::size_t dim_;
    std::size_t capacity_;
    std::vector<Row> rows_;
};

/// GF(2) rank of a list of equal-length rows.
inline std::size_t gf2_rank(std::span<const BitVector> rows) {
    if (rows.empty()) {
        return 0;
    }
    Gf2Basis basis(rows.front().size(), rows.size());
    for (const BitVector &r : rows) {
        basis.add(r);
    }
    return basis.rank();
}

/// Solves rows[i] . w = rhs[i] for w, with free variables set to zero.
/// Returns nullopt when the system is inconsistent.
inline std::optional<BitVector> gf2_solve(std::span<const BitVector> rows, const BitVector &rhs, std::size_t num_vars) {
    if (rhs.size() != rows.size()) {
        throw DimensionError("right-hand side length does not match row count");
    }
    std::vector<BitVector> a(rows.begin(), rows.end());
    std::vector<bool> b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (a[i].size() != num_vars) {
            throw DimensionError("row length does not match variable count");
        }
        b[i] = rhs[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < num_vars && next_row < a.size(); ++col) {
        std::size_t found = next_row;
        while (found < a.size() && !a[found][col]) {
            ++found;
        }
        if (found == a.size()) {
            continue;
        }
        std::swap(a[found], a[next_row]);
        std::swap(b[found], b[next_row]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r != next_row && a[r][col]) {
                a[r] ^= a[next_row];
                b[r] = b[r] != b[next_row];
            }
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    for (std::size_t r = next_row; r < a.size(); ++r) {
        if (b[r]) {
            return std::nullopt;
        }
    }
    BitVector w(num_vars);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        w.set(pivot_cols[r], b[r]);
    }
    return w;
}

}  // namespace eaqecc

#endif
