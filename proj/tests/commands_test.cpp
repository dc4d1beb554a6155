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

#include "eaqecc/commands.hpp"

#include <gtest/gtest.h>

#include "eaqecc/code_file.hpp"

using namespace eaqecc;

namespace {

ClassicalCode load(const char *name) { return load_code_file(std::string(EAQECC_DATA_DIR) + "/" + name).code; }

}  // namespace

TEST(report, format) {
    Report r;
    r.add("a", std::string("x"));
    r.add("b", true);
    r.add("c", std::size_t{3});
    r.add("d", -2LL);
    r.add("e", 0.0);
    r.add("f", 0.125);
    EXPECT_EQ(r.str(), "a=x\nb=yes\nc=3\nd=-2\ne=0\nf=0.125\n");
    EXPECT_EQ(r.get("c"), "3");
    EXPECT_FALSE(r.get("zz").has_value());
}

TEST(cmd_build, golden_code) {
    auto r = cmd_build(golden_h4_code());
    EXPECT_EQ(r.get("code"), "[[4,1;1]]");
    EXPECT_EQ(r.get("c"), "1");
    EXPECT_EQ(r.get("s"), "2");
    EXPECT_EQ(r.get("rate"), "0");
    EXPECT_EQ(r.get("k_formula"), "1");
    EXPECT_EQ(r.get("rows_independent"), "yes");
    EXPECT_EQ(r.get("alice.2"), "XYXI");
    EXPECT_EQ(r.get("pair.0.zbar"), "ZXZI");
    EXPECT_EQ(r.get("pair.0.xbar"), "ZZIZ");
    EXPECT_EQ(r.get("extended.0"), "ZXZIZ");
    EXPECT_EQ(r.get("extended.1"), "ZZIZX");
    EXPECT_TRUE(r.get("isotropic.1").has_value());
    EXPECT_FALSE(r.get("isotropic.2").has_value());
}

TEST(cmd_build, empty_and_dual_containing) {
    auto empty = cmd_build(load("empty.code"));
    EXPECT_EQ(empty.get("code"), "[[3,3;0]]");
    EXPECT_EQ(empty.get("rate"), "1");
    EXPECT_FALSE(empty.get("alice.0").has_value());

    auto dual = cmd_build(load("dual_containing.code"));
    EXPECT_EQ(dual.get("code"), "[[4,2;0]]");
    EXPECT_EQ(dual.get("extended.0"), "ZZZZ");
}

TEST(cmd_analyze, golden_code) {
    auto r = cmd_analyze(golden_h4_code(), {});
    EXPECT_EQ(r.get("code"), "[[4,1,3;1]]");
    EXPECT_EQ(r.get("d"), "3");
    EXPECT_EQ(r.get("d_status"), "exact");
    EXPECT_EQ(r.get("t"), "1");
    EXPECT_EQ(r.get("distinct_syndromes"), "yes");
    EXPECT_EQ(r.get("correctable_up_to_t"), "yes");
    EXPECT_EQ(r.get("singleton"), "saturated");
    EXPECT_EQ(r.get("singleton_quantum_slack"), "0");
}

TEST(cmd_analyze, weight_cap_gives_lower_bound) {
    auto r = cmd_analyze(golden_h4_code(), {.weight_cap = 1, .t = 1});
    EXPECT_EQ(r.get("d_lower_bound"), "2");
    EXPECT_EQ(r.get("d_status"), "lower_bound");
    EXPECT_FALSE(r.get("d").has_value());
    EXPECT_EQ(r.get("singleton"), "unknown");
    EXPECT_EQ(r.get("code"), "[[4,1;1]]");
}

TEST(cmd_analyze, larger_t_breaks_distinctness) {
    auto r = cmd_analyze(golden_h4_code(), {.weight_cap = 12, .t = 2});
    EXPECT_EQ(r.get("distinct_syndromes_t"), "2");
    EXPECT_EQ(r.get("distinct_syndromes"), "no");
    EXPECT_EQ(r.get("correctable_up_to_t"), "no");
}

TEST(cmd_analyze, hamming_gives_steane) {
    auto r = cmd_analyze(load("hamming7.code"), {});
    EXPECT_EQ(r.get("code"), "[[7,1,3;0]]");
    EXPECT_EQ(r.get("singleton"), "not_saturated");
    EXPECT_EQ(r.get("degenerate"), "no");
}

TEST(cmd_analyze, no_logical_operators) {
    auto r = cmd_analyze(ClassicalCode(1, 0, Gf4Matrix::from_rows({{Gf4::one}})), {});
    EXPECT_EQ(r.get("d_status"), "no_logical_operators");
    EXPECT_FALSE(r.get("d").has_value());
}

TEST(cmd_simulate, deterministic_and_thread_independent) {
    SimulateOptions opts{.p = 0.05, .trials = 5000, .seed = 42, .max_weight = 1, .threads = 1};
    auto a = cmd_simulate(golden_h4_code(), opts);
    opts.threads = 4;
    auto b = cmd_simulate(golden_h4_code(), opts);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.get("table_size"), "13");
    EXPECT_EQ(a.get("trials"), "5000");
    EXPECT_EQ(a.get("seed"), "42");
    EXPECT_NE(a.get("failures"), "0");
    EXPECT_THROW(cmd_simulate(golden_h4_code(), {.p = 1.5}), std::domain_error);
}

TEST(cmd_bounds, values) {
    auto r = cmd_bounds({0.0, 0.1});
    EXPECT_EQ(r.get("bounds.0.R_Q"), "1");
    EXPECT_EQ(r.get("bounds.1.f"), "0.1");
    EXPECT_EQ(r.get("bounds.1.R_Q"), "0.3725081563");
    EXPECT_EQ(r.get("bounds.1.R_C"), "0.6862540782");
    EXPECT_THROW(cmd_bounds({2.0}), std::domain_error);
}

TEST(cmd_catalytic, golden_and_infeasible) {
    auto r = cmd_catalytic(golden_h4_code(), 3, 1);
    EXPECT_EQ(r.get("net_qubits_per_round"), "0");
    EXPECT_EQ(r.get("total_net_qubits"), "0");
    EXPECT_EQ(r.get("ebits_conserved"), "yes");
    EXPECT_EQ(r.get("useful"), "no");
    EXPECT_EQ(r.get("round.2.ebits_after"), "1");

    auto dual = cmd_catalytic(load("dual_containing.code"), 2, 0);
    EXPECT_EQ(dual.get("total_net_qubits"), "4");
    EXPECT_EQ(dual.get("useful"), "yes");

    EXPECT_THROW(cmd_catalytic(golden_h4_code(), 3, 0), InfeasibleError);
}
