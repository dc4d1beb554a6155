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

#ifndef EAQECC_COMMANDS_HPP
#define EAQECC_COMMANDS_HPP

// Drivers behind the `eaqecc` subcommands. Each returns its report as a list
// of key=value lines so callers (and tests) can inspect it without going
// through a process boundary.

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eaqecc/analysis.hpp"
#include "eaqecc/builder.hpp"
#include "eaqecc/channel.hpp"
#include "eaqecc/code_file.hpp"

namespace eaqecc {

/// Ordered key=value report.
class Report {
   public:
    void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, const char *value) { add(std::move(key), std::string(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "yes" : "no")); }
    template <typename Int>
        requires std::is_integral_v<Int>
    void add(std::string key, Int value) {
        add(std::move(key), std::to_string(value));
    }
    void add(std::string key, double value, int precision = 6) { add(std::move(key), format_number(value, precision)); }

    /// Value of the first line with `key`, if any.
    std::optional<std::string> get(const std::string &key) const {
        for (const auto &[k, v] : lines_) {
            if (k == key) {
                return v;
            }
        }
        return std::nullopt;
    }

    const std::vector<std::pair<std::string, std::string>> &lines() const noexcept { return lines_; }

    std::string str() const {
        std::string out;
        for (const auto &[k, v] : lines_) {
            out += k;
            out += '=';
            out += v;
            out += '\n';
        }
        return out;
    }

    static std::string format_number(double value, int precision) {
        if (value == 0.0) {
            return "0";
        }
        std::ostringstream os;
        os << std::setprecision(precision) << value;
        return os.str();
    }

   private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

inline void add_generator_block(Report &r, const std::string &prefix, const GeneratorSet &g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        r.add(prefix + "." + std::to_string(i), g[i].str());
    }
}

inline Report cmd_build(const ClassicalCode &classical) {
    EaqeccCode code = build_code(classical);
    CodeParameters p = parameters(code);
    Report r;
    r.add("code", p.label());
    r.add("n", p.n);
    r.add("k", p.k_enc);
    r.add("c", p.c);
    r.add("s", p.s);
    r.add("rate", p.rate);
    r.add("classical_n", classical.n());
    r.add("classical_k", classical.k());
    if (p.k_formula) {
        r.add("k_formula", *p.k_formula);
    }
    r.add("rows_independent", p.rows_independent);
    add_generator_block(r, "alice", code.generators);
    for (std::size_t i = 0; i < code.decomposition.pairs.size(); ++i) {
        r.add("pair." + std::to_string(i) + ".zbar", code.decomposition.pairs[i].zbar.str());
        r.add("pair." + std::to_string(i) + ".xbar", code.decomposition.pairs[i].xbar.str());
    }
    for (std::size_t i = 0; i < code.decomposition.isotropic.size(); ++i) {
        r.add("isotropic." + std::to_string(i), code.decomposition.isotropic[i].str());
    }
    add_generator_block(r, "extended", code.extended);
    return r;
}

struct AnalyzeOptions {
    std::size_t weight_cap = 12;
    std::size_t t = 1;
};

inline Report cmd_analyze(const ClassicalCode &classical, const AnalyzeOptions &opts) {
    EaqeccCode code = build_code(classical);
    DistanceResult dist = min_distance_bruteforce(code, opts.weight_cap);
    Report r;
    switch (dist.kind) {
        case DistanceResult::Kind::exact:
            code.d = dist.value;
            break;
        case DistanceResult::Kind::lower_bound:
            break;
        case DistanceResult::Kind::no_logical:
            break;
    }
    CodeParameters p = parameters(code);
    r.add("code", p.label());
    r.add("n", p.n);
    r.add("k", p.k_enc);
    r.add("c", p.c);
    r.add("s", p.s);
    r.add("rate", p.rate);
    switch (dist.kind) {
        case DistanceResult::Kind::exact:
            r.add("d", dist.value);
            r.add("d_status", "exact");
            r.add("t", *p.t);
            r.add("d_witness", dist.witness->str());
            break;
        case DistanceResult::Kind::lower_bound:
            r.add("d_lower_bound", dist.value);
            r.add("d_status", "lower_bound");
            break;
        case DistanceResult::Kind::no_logical:
            r.add("d_status", "no_logical_operators");
            break;
    }
    r.add("distinct_syndromes_t", opts.t);
    r.add("distinct_syndromes", nondegenerate_distinct_syndromes(code, opts.t));
    r.add("correctable_up_to_t", check_correctable_set(code, errors_up_to_weight(code.n, opts.t)).correctable);
    if (dist.is_exact()) {
        SingletonReport sr = singleton_report(classical.n(), classical.k(), dist.value, code.c);
        r.add("singleton_classical_slack", sr.classical_slack);
        r.add("singleton_quantum_slack", sr.quantum_slack);
        r.add("singleton", sr.classical_saturated() && sr.quantum_saturated() ? "saturated" : "not_saturated");
    } else {
        r.add("singleton", "unknown");
    }
    if (p.degenerate) {
        r.add("degenerate", *p.degenerate);
    } else {
        r.add("degenerate", "unknown");
    }
    return r;
}

struct SimulateOptions {
    double p = 0.01;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::size_t max_weight = 1;
    std::size_t threads = 1;
};

inline Report cmd_simulate(const ClassicalCode &classical, const SimulateOptions &opts) {
    EaqeccCode code = build_code(classical);
    DepolarizingChannel channel(opts.p);
    SyndromeTable table = SyndromeTable::build(code, opts.max_weight);
    TrialResult result = run_trials(code, table, channel, opts.trials, opts.seed, opts.threads);
    Report r;
    r.add("code", parameters(code).label());
    r.add("p", opts.p, 10);
    r.add("trials", result.trials);
    r.add("seed", result.seed);
    r.add("max_weight", table.max_weight_built());
    r.add("table_size", table.size());
    r.add("failures", result.logical_failures);
    r.add("rate", result.failure_rate(), 10);
    r.add("residual_in_isotropic", result.residual_in_isotropic);
    r.add("exact_corrections", result.exact_corrections);
    r.add("unknown_syndromes", result.unknown_syndromes);
    r.add("residual_syndrome_nonzero", result.residual_syndrome_nonzero);
    return r;
}

inline Report cmd_bounds(const std::vector<double> &f_list) {
    Report r;
    for (std::size_t i = 0; i < f_list.size(); ++i) {
        HashingRates h = hashing_rates(f_list[i]);
        std::string prefix = "bounds." + std::to_string(i);
        r.add(prefix + ".f", h.f, 10);
        r.add(prefix + ".R_C", h.classical, 10);
        r.add(prefix + ".R_Q", h.quantum, 10);
    }
    return r;
}

inline Report cmd_catalytic(const ClassicalCode &classical, std::size_t rounds, std::size_t initial_ebits) {
    EaqeccCode code = build_code(classical);
    CatalyticLedger ledger = catalytic_schedule(code.n, code.k_enc, code.c, rounds, initial_ebits);
    Report r;
    r.add("code", parameters(code).label());
    r.add("rounds", rounds);
    r.add("initial_ebits", initial_ebits);
    bool conserved = true;
    for (std::size_t i = 0; i < ledger.rounds.size(); ++i) {
        const CatalyticRound &round = ledger.rounds[i];
        std::string prefix = "round." + std::to_string(i);
        r.add(prefix + ".ebits_before", round.ebits_before);
        r.add(prefix + ".ebits_consumed", round.ebits_consumed);
        r.add(prefix + ".ebits_regenerated", round.ebits_regenerated);
        r.add(prefix + ".ebits_after", round.ebits_after);
        r.add(prefix + ".net_qubits", round.net_qubits);
        conserved = conserved && round.ebits_after == initial_ebits;
    }
    r.add("net_qubits_per_round", static_cast<long long>(code.k_enc) - static_cast<long long>(code.c));
    r.add("total_net_qubits", ledger.total_net_qubits());
    r.add("ebits_conserved", conserved);
    r.add("useful", ledger.useful());
    return r;
}

}  // namespace eaqecc

#endif
