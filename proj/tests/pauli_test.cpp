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

#include "eaqecc/pauli.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"

using namespace eaqecc;

TEST(pauli, parse_maps_letters_to_xz) {
    auto p = parse_pauli("ZXZI");
    EXPECT_EQ(p.num_qubits(), 4);
    EXPECT_EQ(p.x().str(), "0100");
    EXPECT_EQ(p.z().str(), "1010");
    EXPECT_EQ(p.phase_exp(), 0);

    auto y = parse_pauli("Y");
    EXPECT_TRUE(y.x()[0]);
    EXPECT_TRUE(y.z()[0]);

    EXPECT_TRUE(parse_pauli("IIII").is_identity_up_to_phase());
    EXPECT_EQ(parse_pauli("IIII").weight(), 0);
    EXPECT_EQ(parse_pauli("ZYYX").str(), "ZYYX");
}

TEST(pauli, parse_phase_prefixes) {
    EXPECT_EQ(parse_pauli("+XZ").phase_exp(), 0);
    EXPECT_EQ(parse_pauli("iXZ").phase_exp(), 1);
    EXPECT_EQ(parse_pauli("-XZ").phase_exp(), 2);
    EXPECT_EQ(parse_pauli("-iXZ").phase_exp(), 3);
    EXPECT_EQ(parse_pauli("+iXZ").phase_exp(), 1);
    for (const char *canonical : {"XZ", "iXZ", "-XZ", "-iXZ", "", "-i"}) {
        EXPECT_EQ(format_pauli(parse_pauli(canonical)), canonical);
    }
}

TEST(pauli, parse_rejects_bad_characters_with_position) {
    try {
        parse_pauli("-XQZ");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position, 2);
    }
    EXPECT_THROW(parse_pauli("xz"), ParseError);
    EXPECT_THROW(parse_pauli("X Z"), ParseError);
}

TEST(pauli, format_round_trip_random) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = oracle::random_pauli(1 + rng() % 70, rng);
        EXPECT_EQ(parse_pauli(format_pauli(p)), p);
    }
}

TEST(pauli, multiply_x_z_gives_minus_i_y) {
    auto p = multiply(parse_pauli("X"), parse_pauli("Z"));
    EXPECT_TRUE(p.x()[0]);
    EXPECT_TRUE(p.z()[0]);
    EXPECT_EQ(p.phase_exp(), 3);
}

TEST(pauli, multiply_by_identity) {
    auto p = parse_pauli("-iXYZI");
    EXPECT_EQ(multiply(p, PauliString(4)), p);
    EXPECT_EQ(multiply(PauliString(4), p), p);
}

TEST(pauli, hermitian_squares_to_plus_identity) {
    auto p = parse_pauli("ZXZI");
    auto sq = multiply(p, p);
    EXPECT_TRUE(sq.is_identity_up_to_phase());
    EXPECT_EQ(sq.phase_exp(), 0);
    for (const auto &text : oracle::all_paulis(2)) {
        auto q = parse_pauli(text);
        EXPECT_EQ(multiply(q, q), PauliString(2)) << text;
    }
}

TEST(pauli, single_qubit_table_literal) {
    // Row * column under Y = iXZ, written out as (result, power of i).
    const std::map<std::string, std::pair<char, int>> table = {
        {"II", {'I', 0}}, {"IX", {'X', 0}}, {"IY", {'Y', 0}}, {"IZ", {'Z', 0}},
        {"XI", {'X', 0}}, {"XX", {'I', 0}}, {"XY", {'Z', 1}}, {"XZ", {'Y', 3}},
        {"YI", {'Y', 0}}, {"YX", {'Z', 3}}, {"YY", {'I', 0}}, {"YZ", {'X', 1}},
        {"ZI", {'Z', 0}}, {"ZX", {'Y', 1}}, {"ZY", {'X', 3}}, {"ZZ", {'I', 0}},
    };
    for (const auto &[key, expected] : table) {
        auto p = multiply(parse_pauli(std::string(1, key[0])), parse_pauli(std::string(1, key[1])));
        EXPECT_EQ(p.at(0), expected.first) << key;
        EXPECT_EQ(p.phase_exp(), expected.second) << key;
        EXPECT_EQ(oracle::letter_product(key[0], key[1]), expected) << key;
    }
}

TEST(pauli, multiply_matches_per_qubit_composition) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 130;
        auto ta = oracle::random_pauli_text(n, rng);
        auto tb = oracle::random_pauli_text(n, rng);
        int pa = static_cast<int>(rng() & 3);
        int pb = static_cast<int>(rng() & 3);
        auto [expected, phase] = oracle::product(ta, pa, tb, pb);
        auto got = multiply(parse_pauli(ta).with_phase(pa), parse_pauli(tb).with_phase(pb));
        EXPECT_EQ(got, parse_pauli(expected).with_phase(static_cast<std::uint8_t>(phase)));
    }
}

TEST(pauli, multiply_is_associative) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 80;
        auto a = oracle::random_pauli(n, rng);
        auto b = oracle::random_pauli(n, rng);
        auto c = oracle::random_pauli(n, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(pauli, multiply_dimension_mismatch_throws) {
    EXPECT_THROW(multiply(parse_pauli("XX"), parse_pauli("X")), DimensionError);
    EXPECT_THROW(symplectic_product(parse_pauli("XX"), parse_pauli("X")), DimensionError);
}

TEST(pauli, symplectic_product_examples) {
    EXPECT_TRUE(symplectic_product(parse_pauli("ZXZI"), parse_pauli("ZZIZ")));
    EXPECT_FALSE(symplectic_product(parse_pauli("ZZIZ"), parse_pauli("XYXI")));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = oracle::random_pauli(1 + rng() % 100, rng);
        EXPECT_FALSE(symplectic_product(p, p));
    }
}

TEST(pauli, symplectic_product_matches_letter_count) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 150;
        auto a = oracle::random_pauli_text(n, rng);
        auto b = oracle::random_pauli_text(n, rng);
        EXPECT_EQ(symplectic_product(parse_pauli(a), parse_pauli(b)), oracle::anticommute(a, b));
        EXPECT_EQ(symplectic_product(parse_pauli(a).symplectic_row(), parse_pauli(b).symplectic_row()),
                  oracle::anticommute(a, b));
    }
}

TEST(pauli, symplectic_product_is_homomorphism_exhaustive_two_qubits) {
    auto all = oracle::all_paulis(2);
    for (const auto &a : all) {
        for (const auto &b : all) {
            auto ab = parse_pauli(a) * parse_pauli(b);
            for (const auto &c : all) {
                auto pc = parse_pauli(c);
                EXPECT_EQ(symplectic_product(ab, pc),
                          symplectic_product(parse_pauli(a), pc) != symplectic_product(parse_pauli(b), pc));
            }
        }
    }
}

TEST(pauli, weight_subadditive) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 90;
        auto a = oracle::random_pauli(n, rng);
        auto b = oracle::random_pauli(n, rng);
        EXPECT_LE((a * b).weight(), a.weight() + b.weight());
        EXPECT_EQ(a.weight(), oracle::weight(a.with_phase(0).str()));
    }
}

TEST(pauli, gf4_map_examples) {
    using V = std::vector<Gf4>;
    const Gf4 o = Gf4::zero, l = Gf4::one, w = Gf4::omega, W = Gf4::omega_bar;
    EXPECT_EQ(pauli_to_gf4(parse_pauli("ZXZI")), (V{w, W, w, o}));
    EXPECT_EQ(pauli_to_gf4(parse_pauli("IIII")), (V{o, o, o, o}));
    EXPECT_EQ(pauli_to_gf4(parse_pauli("XYXI")), (V{W, l, W, o}));
    EXPECT_EQ(gf4_to_pauli({w, W, l, o}), parse_pauli("ZXYI"));
}

TEST(pauli, gf4_round_trip_drops_phase) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = oracle::random_pauli(1 + rng() % 40, rng);
        EXPECT_EQ(gf4_to_pauli(pauli_to_gf4(p)), p.with_phase(0));
    }
}

TEST(pauli, gf4_addition_is_pauli_multiplication_up_to_phase) {
    auto all = oracle::all_paulis(2);
    for (const auto &a : all) {
        for (const auto &b : all) {
            auto va = pauli_to_gf4(parse_pauli(a));
            auto vb = pauli_to_gf4(parse_pauli(b));
            std::vector<Gf4> sum(2);
            for (std::size_t j = 0; j < 2; ++j) {
                sum[j] = va[j] + vb[j];
            }
            EXPECT_TRUE(gf4_to_pauli(sum).equal_up_to_phase(parse_pauli(a) * parse_pauli(b)));
        }
    }
}

TEST(pauli, trace_inner_product_is_symplectic_product) {
    auto all = oracle::all_paulis(2);
    for (const auto &a : all) {
        for (const auto &b : all) {
            EXPECT_EQ(trace_inner(pauli_to_gf4(parse_pauli(a)), pauli_to_gf4(parse_pauli(b))),
                      oracle::anticommute(a, b))
                << a << " " << b;
        }
    }
}

TEST(pauli, tensor_and_restrict) {
    auto p = parse_pauli("ZXZI").tensor(parse_pauli("Z"));
    EXPECT_EQ(p.str(), "ZXZIZ");
    EXPECT_EQ(p.restrict_to(0, 4).str(), "ZXZI");
    EXPECT_EQ(p.restrict_to(4, 1).str(), "Z");
}
