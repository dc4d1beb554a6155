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

#ifndef EAQECC_ANALYSIS_HPP
#define EAQECC_ANALYSIS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eaqecc/bit_vector.hpp"
#include "eaqecc/builder.hpp"
#include "eaqecc/gf2.hpp"
#include "eaqecc/pauli.hpp"

namespace eaqecc {

/// One bit per sender-side generator, in generator order.
using Syndrome = BitVector;

/// Bit i is 1 iff generator i anti-commutes with `e`. Receiver qubits are
/// error free, so only the sender-side generators matter.
inline Syndrome syndrome_of(const EaqeccCode &code, const PauliString &e) {
    if (e.num_qubits() != code.n) {
        throw DimensionError(
            "error acts on " + std::to_string(e.num_qubits()) + " qubits, code has " + std::to_string(code.n));
    }
    Syndrome out(code.generators.size());
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        out.set(i, symplectic_product(code.generators[i], e));
    }
    return out;
}

/// Precomputed syndromes of single-qubit X and Z errors. Syndromes are
/// linear, so any error's syndrome is the XOR of its columns.
class SyndromeColumns {
   public:
    explicit SyndromeColumns(const EaqeccCode &code) : n_(code.n) {
        for (std::size_t q = 0; q < n_; ++q) {
            x_cols_.push_back(syndrome_of(code, PauliString::single(n_, q, 'X')));
            z_cols_.push_back(syndrome_of(code, PauliString::single(n_, q, 'Z')));
        }
        m_ = code.generators.size();
    }

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t syndrome_length() const noexcept { return m_; }

    /// `pauli` is 1 = X, 2 = Z, 3 = Y (bit 0 marks x, bit 1 marks z).
    void accumulate(Syndrome &s, std::size_t q, unsigned pauli) const {
        if (pauli & 1U) {
            s ^= x_cols_[q];
        }
        if (pauli & 2U) {
            s ^= z_cols_[q];
        }
    }

    Syndrome of(const PauliString &e) const {
        Syndrome s(m_);
        for (std::size_t q = 0; q < n_; ++q) {
            accumulate(s, q, static_cast<unsigned>(e.x()[q]) | (static_cast<unsigned>(e.z()[q]) << 1U));
        }
        return s;
    }

   private:
    std::size_t n_;
    std::size_t m_ = 0;
    std::vector<Syndrome> x_cols_;
    std::vector<Syndrome> z_cols_;
};

/// Visits every Pauli of exactly `weight` on the columns' qubit count as
/// (x, z, syndrome). Supports are visited in lexicographic order, and per
/// qubit the letters in the order X, Z, Y. Returning true from `visit` stops
/// the walk; the function then returns true.
template <typename Visit>
bool for_each_error_of_weight(const SyndromeColumns &cols, std::size_t weight, Visit &&visit) {
    std::size_t n = cols.num_qubits();
    if (weight > n) {
        return false;
    }
    BitVector x(n);
    BitVector z(n);
    Syndrome s(cols.syndrome_length());
    auto recurse = [&](auto &self, std::size_t start, std::size_t remaining) -> bool {
        if (remaining == 0) {
            return visit(static_cast<const BitVector &>(x), static_cast<const BitVector &>(z),
                         static_cast<const Syndrome &>(s));
        }
        for (std::size_t q = start; q + remaining <= n; ++q) {
            for (unsigned pauli = 1; pauli <= 3; ++pauli) {
                x.set(q, pauli & 1U);
                z.set(q, pauli & 2U);
                cols.accumulate(s, q, pauli);
                bool stop = self(self, q + 1, remaining - 1);
                cols.accumulate(s, q, pauli);
                x.set(q, false);
                z.set(q, false);
                if (stop) {
                    return true;
                }
            }
        }
        return false;
    };
    return recurse(recurse, 0, weight);
}

/// Span of the isotropic generators, for membership up to phase.
class IsotropicSpan {
   public:
    explicit IsotropicSpan(const EaqeccCode &code) : basis_(2 * code.n, code.decomposition.isotropic.size() + 1) {
        for (const PauliString &g : code.decomposition.isotropic) {
            basis_.add(g.symplectic_row());
        }
    }
    bool contains(const BitVector &x, const BitVector &z) const { return basis_.contains(BitVector::concat(x, z)); }
    bool contains(const PauliString &p) const { return basis_.contains(p.symplectic_row()); }

   private:
    Gf2Basis basis_;
};

/// Whether `p` lies in the isotropic group, up to phase.
inline bool in_isotropic(const EaqeccCode &code, const PauliString &p) {
    if (p.num_qubits() != code.n) {
        throw DimensionError("operator qubit count does not match code");
    }
    return IsotropicSpan(code).contains(p);
}

struct CorrectabilityResult {
    bool correctable = true;
    /// Indices (a, b) into the error list whose product is an undetectable
    /// logical error.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Every product E_a^dagger E_b must have a nonzero syndrome or lie in the
/// isotropic group.
///
/// Errors with different syndromes are always distinguishable, so only errors
/// sharing a syndrome are compared, each against the first error seen with
/// that syndrome. The isotropic group is closed under products, so that is
/// equivalent to checking every pair.
inline CorrectabilityResult check_correctable_set(const EaqeccCode &code, const std::vector<PauliString> &errors) {
    SyndromeColumns cols(code);
    IsotropicSpan iso(code);
    std::unordered_map<Syndrome, std::size_t, BitVectorHash> first_with;
    CorrectabilityResult result;
    for (std::size_t b = 0; b < errors.size(); ++b) {
        if (errors[b].num_qubits() != code.n) {
            throw DimensionError("error qubit count does not match code");
        }
        auto [it, inserted] = first_with.try_emplace(cols.of(errors[b]), b);
        if (inserted) {
            continue;
        }
        std::size_t a = it->second;
        if (!iso.contains(errors[a].x() ^ errors[b].x(), errors[a].z() ^ errors[b].z())) {
            result.correctable = false;
            result.witness = std::make_pair(a, b);
            return result;
        }
    }
    return result;
}

/// Identity plus every weight-1..max_weight Pauli, in enumeration order.
inline std::vector<PauliString> errors_up_to_weight(std::size_t n, std::size_t max_weight) {
    std::vector<PauliString> out{PauliString(n)};
    EaqeccCode trivial;
    trivial.n = n;
    trivial.generators = GeneratorSet(n);
    SyndromeColumns cols(trivial);
    for (std::size_t w = 1; w <= max_weight && w <= n; ++w) {
        for_each_error_of_weight(cols, w, [&](const BitVector &x, const BitVector &z, const Syndrome &) {
            out.emplace_back(x, z);
            return false;
        });
    }
    return out;
}

/// Result of a bounded distance search.
struct DistanceResult {
    enum class Kind {
        /// `value` is the distance; `witness` attains it.
        exact,
        /// Search stopped early; the distance is at least `value`.
        lower_bound,
        /// Every undetectable error lies in the isotropic group (k_enc = 0).
        no_logical,
    };
    Kind kind = Kind::exact;
    std::size_t value = 0;
    std::optional<PauliString> witness;

    bool is_exact() const noexcept { return kind == Kind::exact; }
    /// The distance, with no_logical treated as unbounded.
    bool at_least(std::size_t w) const noexcept { return kind == Kind::no_logical || value >= w; }
};

/// Candidate errors a distance search may visit before settling for a bound.
inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 26;

inline std::uint64_t count_errors_of_weight(std::size_t n, std::size_t w) {
    // C(n, w) * 3^w, saturating.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (w > n) {
        return 0;
    }
    unsigned __int128 count = 1;
    for (std::size_t i = 0; i < w; ++i) {
        count = count * (n - i) / (i + 1);
        if (count > kMax) {
            return kMax;
        }
    }
    for (std::size_t i = 0; i < w; ++i) {
        count *= 3;
        if (count > kMax) {
            return kMax;
        }
    }
    return static_cast<std::uint64_t>(count);
}

/// Smallest weight of an error with zero syndrome outside the isotropic group.
///
/// Weights are tried in increasing order up to `weight_cap`. A weight level
/// whose candidate count would push the running total past `budget` is not
/// started, and the result is then a lower bound.
inline DistanceResult min_distance_bruteforce(
    const EaqeccCode &code, std::size_t weight_cap, std::uint64_t budget = kDefaultDistanceBudget) {
    if (weight_cap < 1) {
        throw std::invalid_argument("weight cap must be at least 1");
    }
    SyndromeColumns cols(code);
    IsotropicSpan iso(code);
    std::uint64_t spent = 0;
    for (std::size_t w = 1; w <= code.n; ++w) {
        if (w > weight_cap) {
            return {DistanceResult::Kind::lower_bound, w, std::nullopt};
        }
        std::uint64_t level = count_errors_of_weight(code.n, w);
        if (level > budget - std::min(spent, budget)) {
            return {DistanceResult::Kind::lower_bound, w, std::nullopt};
        }
        spent += level;
        std::optional<PauliString> found;
        for_each_error_of_weight(cols, w, [&](const BitVector &x, const BitVector &z, const Syndrome &s) {
            if (s.none() && !iso.contains(x, z)) {
                found.emplace(x, z);
                return true;
            }
            return false;
        });
        if (found) {
            return {DistanceResult::Kind::exact, w, std::move(found)};
        }
    }
    return {DistanceResult::Kind::no_logical, code.n + 1, std::nullopt};
}

/// True iff all non-identity errors of weight <= t have pairwise distinct,
/// nonzero syndromes.
inline bool nondegenerate_distinct_syndromes(const EaqeccCode &code, std::size_t t) {
    SyndromeColumns cols(code);
    std::unordered_set<Syndrome, BitVectorHash> seen;
    for (std::size_t w = 1; w <= t && w <= code.n; ++w) {
        bool clash = for_each_error_of_weight(cols, w, [&](const BitVector &, const BitVector &, const Syndrome &s) {
            return s.none() || !seen.insert(s).second;
        });
        if (clash) {
            return false;
        }
    }
    return true;
}

struct SingletonReport {
    /// n - k - (d - 1).
    long long classical_slack = 0;
    /// 2(n - k) - 2(d - 1).
    long long quantum_slack = 0;

    bool classical_saturated() const noexcept { return classical_slack == 0; }
    bool quantum_saturated() const noexcept { return quantum_slack == 0; }
};

/// Singleton slacks for a classical [n, k, d] code and the [[n, 2k - n + c, d; c]]
/// code built from it. `c` does not enter either slack.
inline SingletonReport singleton_report(std::size_t n, std::size_t k, std::size_t d, std::size_t /*c*/) {
    if (k > n || d == 0) {
        throw std::invalid_argument("Singleton report needs k <= n and d >= 1");
    }
    SingletonReport r;
    auto nn = static_cast<long long>(n);
    auto kk = static_cast<long long>(k);
    auto dd = static_cast<long long>(d);
    r.classical_slack = nn - kk - (dd - 1);
    r.quantum_slack = 2 * (nn - kk) - 2 * (dd - 1);
    return r;
}

/// -f log_b f - (1 - f) log_b (1 - f), with 0 log 0 = 0.
inline double entropy(double f, double base) {
    auto term = [base](double p) { return p <= 0.0 ? 0.0 : -p * std::log(p) / std::log(base); };
    return term(f) + term(1.0 - f);
}

struct HashingRates {
    double f = 0;
    /// 1 - (H_4(f) + f log_4 3), base-4 rate of a capacity-achieving classical code.
    double classical = 0;
    /// 2 * classical - 1, in qubits per channel use.
    double quantum = 0;
};

inline HashingRates hashing_rates(double f) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::domain_error("error probability must lie in [0, 1]");
    }
    HashingRates r;
    r.f = f;
    r.classical = 1.0 - (entropy(f, 4.0) + f * std::log(3.0) / std::log(4.0));
    r.quantum = 2.0 * r.classical - 1.0;
    return r;
}

struct BoundsReport {
    std::optional<SingletonReport> singleton;
    std::vector<HashingRates> hashing;
};

}  // namespace eaqecc

#endif
