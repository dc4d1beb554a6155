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

#ifndef EAQECC_CHANNEL_HPP
#define EAQECC_CHANNEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "eaqecc/analysis.hpp"
#include "eaqecc/builder.hpp"
#include "eaqecc/pauli.hpp"

namespace eaqecc {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t v) noexcept {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    return v ^ (v >> 31);
}

/// SplitMix64 stream. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    /// Independent stream for trial `index` under `seed`.
    static constexpr SplitMix64 for_trial(std::uint64_t seed, std::uint64_t index) noexcept {
        return SplitMix64(mix64(seed ^ mix64(index)));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    constexpr result_type operator()() noexcept {
        std::uint64_t out = mix64(state_);
        state_ += 0x9e3779b97f4a7c15ULL;
        return out;
    }

   private:
    std::uint64_t state_;
};

/// Each qubit independently suffers X, Y or Z with probability p/3 each.
struct DepolarizingChannel {
    explicit DepolarizingChannel(double p) : p(p) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::domain_error("depolarizing probability must lie in [0, 1]");
        }
    }
    double p;
};

/// One uniform draw per qubit: u < p/3 gives X, u < 2p/3 gives Y, u < p gives Z.
template <typename Rng>
PauliString sample_error(const DepolarizingChannel &ch, std::size_t n, Rng &rng) {
    BitVector x(n);
    BitVector z(n);
    for (std::size_t q = 0; q < n; ++q) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u >= ch.p) {
            continue;
        }
        double third = ch.p / 3.0;
        if (u < third) {
            x.set(q, true);
        } else if (u < 2.0 * third) {
            x.set(q, true);
            z.set(q, true);
        } else {
            z.set(q, true);
        }
    }
    return PauliString(std::move(x), std::move(z));
}

/// Lookup decoder from syndrome to a minimum-weight correction.
///
/// Built by enumerating errors in increasing weight; within a weight the
/// lexicographically smallest (x|z) pattern wins, and a syndrome already
/// reached by a lighter error is never replaced.
class SyndromeTable {
   public:
    static SyndromeTable build(const EaqeccCode &code, std::size_t max_weight) {
        SyndromeTable table;
        table.n_ = code.n;
        table.max_weight_ = std::min(max_weight, code.n);
        SyndromeColumns cols(code);
        table.entries_.emplace(Syndrome(cols.syndrome_length()), PauliString(code.n));
        for (std::size_t w = 1; w <= table.max_weight_; ++w) {
            std::unordered_map<Syndrome, BitVector, BitVectorHash> best;
            for_each_error_of_weight(cols, w, [&](const BitVector &x, const BitVector &z, const Syndrome &s) {
                if (table.entries_.contains(s)) {
                    return false;
                }
                BitVector row = BitVector::concat(x, z);
                auto it = best.find(s);
                if (it == best.end()) {
                    best.emplace(s, std::move(row));
                } else if (row.lex_less(it->second)) {
                    it->second = std::move(row);
                }
                return false;
            });
            for (auto &[s, row] : best) {
                table.entries_.emplace(s, PauliString::from_symplectic(row));
            }
        }
        return table;
    }

    /// nullptr when the syndrome was never reached.
    const PauliString *lookup(const Syndrome &s) const {
        auto it = entries_.find(s);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t max_weight_built() const noexcept { return max_weight_; }
    std::size_t num_qubits() const noexcept { return n_; }
    const std::unordered_map<Syndrome, PauliString, BitVectorHash> &entries() const noexcept { return entries_; }

   private:
    std::size_t n_ = 0;
    std::size_t max_weight_ = 0;
    std::unordered_map<Syndrome, PauliString, BitVectorHash> entries_;
};

struct TrialResult {
    std::uint64_t trials = 0;
    std::uint64_t logical_failures = 0;
    /// Trials whose residual C*E landed in the isotropic group (the successes).
    std::uint64_t residual_in_isotropic = 0;
    /// Successes where the residual was the identity itself.
    std::uint64_t exact_corrections = 0;
    /// Failures caused by a syndrome absent from the table.
    std::uint64_t unknown_syndromes = 0;
    /// Trials where the corrected state still had a nonzero syndrome.
    std::uint64_t residual_syndrome_nonzero = 0;
    std::uint64_t seed = 0;

    std::uint64_t successes() const noexcept { return trials - logical_failures; }
    double failure_rate() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(logical_failures) / static_cast<double>(trials);
    }

    TrialResult &operator+=(const TrialResult &o) noexcept {
        trials += o.trials;
        logical_failures += o.logical_failures;
        residual_in_isotropic += o.residual_in_isotropic;
        exact_corrections += o.exact_corrections;
        unknown_syndromes += o.unknown_syndromes;
        residual_syndrome_nonzero += o.residual_syndrome_nonzero;
        return *this;
    }
    bool operator==(const TrialResult &) const = default;
};

/// Decodes single errors against a fixed table.
class Decoder {
   public:
    Decoder(const EaqeccCode &code, const SyndromeTable &table) : table_(table), cols_(code), iso_(code) {
        if (table.num_qubits() != code.n) {
            throw DimensionError("syndrome table was built for a different code");
        }
    }

    /// Adds the outcome of correcting `error` to `tally`.
    void record(const PauliString &error, TrialResult &tally) const {
        ++tally.trials;
        const PauliString *correction = table_.lookup(cols_.of(error));
        if (correction == nullptr) {
            ++tally.logical_failures;
            ++tally.unknown_syndromes;
            return;
        }
        BitVector rx = correction->x() ^ error.x();
        BitVector rz = correction->z() ^ error.z();
        PauliString residual(rx, rz);
        if (cols_.of(residual).any()) {
            ++tally.residual_syndrome_nonzero;
        }
        if (iso_.contains(rx, rz)) {
            ++tally.residual_in_isotropic;
            if (residual.is_identity_up_to_phase()) {
                ++tally.exact_corrections;
            }
        } else {
            ++tally.logical_failures;
        }
    }

   private:
    const SyndromeTable &table_;
    SyndromeColumns cols_;
    IsotropicSpan iso_;
};

/// Decodes each given error once.
inline TrialResult run_injected(const EaqeccCode &code, const SyndromeTable &table,
                                const std::vector<PauliString> &errors) {
    Decoder decoder(code, table);
    TrialResult tally;
    for (const PauliString &e : errors) {
        decoder.record(e, tally);
    }
    return tally;
}

/// Monte Carlo over `trials` channel uses. Trial i draws from
/// SplitMix64::for_trial(seed, i), so the result does not depend on `workers`.
inline TrialResult run_trials(const EaqeccCode &code, const SyndromeTable &table, const DepolarizingChannel &ch,
                              std::uint64_t trials, std::uint64_t seed, std::size_t workers = 1) {
    workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, std::max<std::uint64_t>(trials, 1)));
    Decoder decoder(code, table);
    std::vector<TrialResult> partial(workers);
    auto work = [&](std::size_t w) {
        std::uint64_t begin = trials * w / workers;
        std::uint64_t end = trials * (w + 1) / workers;
        for (std::uint64_t i = begin; i < end; ++i) {
            SplitMix64 rng = SplitMix64::for_trial(seed, i);
            decoder.record(sample_error(ch, code.n, rng), partial[w]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    TrialResult total;
    for (const TrialResult &p : partial) {
        total += p;
    }
    total.seed = seed;
    return total;
}

struct CatalyticRound {
    std::size_t ebits_before = 0;
    std::size_t ebits_consumed = 0;
    std::size_t ebits_regenerated = 0;
    std::size_t ebits_after = 0;
    /// k_enc - c; negative when the code costs more entanglement than it sends.
    long long net_qubits = 0;
};

/// Per-round entanglement accounting for repeated catalytic use.
struct CatalyticLedger {
    std::size_t n = 0;
    std::size_t k_enc = 0;
    std::size_t c = 0;
    std::size_t initial_ebits = 0;
    std::vector<CatalyticRound> rounds;

    long long total_net_qubits() const noexcept {
        long long total = 0;
        for (const CatalyticRound &r : rounds) {
            total += r.net_qubits;
        }
        return total;
    }
    /// A code is worth running catalytically only when k_enc > c.
    bool useful() const noexcept { return k_enc > c; }
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Each round spends c ebits, sends k_enc - c net qubits and leaves c fresh
/// ebits shared with the receiver.
inline CatalyticLedger catalytic_schedule(std::size_t n, std::size_t k_enc, std::size_t c, std::size_t rounds,
                                          std::size_t initial_ebits) {
    if (initial_ebits < c) {
        throw InfeasibleError(
            "catalytic use needs at least " + std::to_string(c) + " initial ebits, have " +
            std::to_string(initial_ebits));
    }
    if (k_enc + c > n) {
        throw std::invalid_argument("k_enc + c exceeds n");
    }
    CatalyticLedger ledger{n, k_enc, c, initial_ebits, {}};
    std::size_t held = initial_ebits;
    for (std::size_t r = 0; r < rounds; ++r) {
        CatalyticRound round;
        round.ebits_before = held;
        round.ebits_consumed = c;
        held -= c;
        round.ebits_regenerated = c;
        held += c;
        round.ebits_after = held;
        round.net_qubits = static_cast<long long>(k_enc) - static_cast<long long>(c);
        ledger.rounds.push_back(round);
    }
    return ledger;
}

}  // namespace eaqecc

#endif
