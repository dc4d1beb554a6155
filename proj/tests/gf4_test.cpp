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

#include "eaqecc/gf4.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace eaqecc;

namespace {

std::array<Gf4, 4> elements() { return {Gf4::zero, Gf4::one, Gf4::omega, Gf4::omega_bar}; }

}  // namespace

TEST(gf4, defining_relations) {
    const Gf4 w = Gf4::omega;
    EXPECT_EQ(w * w, Gf4::omega_bar);
    EXPECT_EQ(w * w * w, Gf4::one);
    EXPECT_EQ(Gf4::one + w + w * w, Gf4::zero);
    EXPECT_EQ(Gf4::omega_bar, Gf4::one + w);
    for (Gf4 x : elements()) {
        EXPECT_EQ(x + x, Gf4::zero);
    }
}

TEST(gf4, field_axioms_exhaustive) {
    for (Gf4 a : elements()) {
        EXPECT_EQ(a + Gf4::zero, a);
        EXPECT_EQ(a * Gf4::one, a);
        EXPECT_EQ(a * Gf4::zero, Gf4::zero);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Gf4::one);
        }
        for (Gf4 b : elements()) {
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero() && !b.is_zero()) {
                EXPECT_FALSE((a * b).is_zero());
            }
            for (Gf4 c : elements()) {
                EXPECT_EQ((a + b) + c, a + (b + c));
                EXPECT_EQ((a * b) * c, a * (b * c));
                EXPECT_EQ(a * (b + c), a * b + a * c);
            }
        }
    }
    EXPECT_THROW(Gf4::zero.inverse(), std::domain_error);
}

TEST(gf4, conjugation_and_trace) {
    EXPECT_EQ(Gf4::omega.conj(), Gf4::omega_bar);
    EXPECT_EQ(Gf4::omega_bar.conj(), Gf4::omega);
    EXPECT_EQ(Gf4::one.conj(), Gf4::one);
    EXPECT_EQ(Gf4::zero.trace(), Gf4::zero);
    EXPECT_EQ(Gf4::one.trace(), Gf4::zero);
    EXPECT_EQ(Gf4::omega.trace(), Gf4::one);
    EXPECT_EQ(Gf4::omega_bar.trace(), Gf4::one);
}

TEST(gf4, tokens) {
    for (Gf4 x : elements()) {
        EXPECT_EQ(Gf4::from_token(x.token()), x);
    }
    EXPECT_EQ(Gf4::from_token('w'), Gf4::omega);
    EXPECT_EQ(Gf4::from_token('W'), Gf4::omega_bar);
    EXPECT_THROW(Gf4::from_token('2'), std::invalid_argument);
}

TEST(gf4_matrix, rank) {
    const Gf4 o = Gf4::zero, l = Gf4::one, w = Gf4::omega, W = Gf4::omega_bar;
    EXPECT_EQ(Gf4Matrix::from_rows({{l, w, l, o}, {l, l, o, l}}).rank(), 2);
    // Second row is w times the first.
    EXPECT_EQ(Gf4Matrix::from_rows({{l, w, o}, {w, W, o}}).rank(), 1);
    EXPECT_EQ(Gf4Matrix::from_rows({{o, o}}).rank(), 0);
    EXPECT_EQ(Gf4Matrix(0, 3).rank(), 0);
}

TEST(gf4_matrix, scaled_and_bounds) {
    const Gf4 l = Gf4::one, w = Gf4::omega;
    auto m = Gf4Matrix::from_rows({{l, w}});
    auto s = m.scaled(w);
    EXPECT_EQ(s(0, 0), w);
    EXPECT_EQ(s(0, 1), Gf4::omega_bar);
    EXPECT_THROW(m(1, 0), std::out_of_range);
    EXPECT_THROW(Gf4Matrix::from_rows({{l}, {l, w}}), DimensionError);
}
