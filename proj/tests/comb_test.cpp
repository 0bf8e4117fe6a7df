// Copyright 2026 The geotele Authors
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


#include "geotele/comb.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "geotele/gates.hpp"
#include "geotele/random.hpp"

using namespace geotele;

namespace {

CombTable fig2_table() {
    return {
        {BitString::parse("000"), -0.07}, {BitString::parse("100"), 0.32},
        {BitString::parse("010"), -3.08}, {BitString::parse("001"), 1.06},
        {BitString::parse("110"), -0.85}, {BitString::parse("101"), 0.27},
        {BitString::parse("011"), -0.86}, {BitString::parse("111"), 4.07},
    };
}

double dot(const Multivector& a, const Multivector& b) {
    double s = 0;
    for (std::size_t m = 0; m < a.size(); ++m) s += a[m] * b[m];
    return s;
}

}  // namespace

TEST(comb, comb_examples) {
    EXPECT_EQ(comb(BitString::parse("100")).word, 0b001u);
    EXPECT_EQ(comb(BitString::parse("000")).word, 0u);
    EXPECT_EQ(comb(BitString::parse("111")).word, 0b111u);
    EXPECT_EQ(comb(BitString::parse("011")).word, 0b110u);
}

TEST(comb, comb_is_a_bijection) {
    for (int dim = 1; dim <= 6; ++dim) {
        for (std::uint32_t m = 0; m < (1u << dim); ++m) {
            const auto bits = BitString::of({m}, dim);
            EXPECT_EQ(bits.size(), dim);
            EXPECT_EQ(comb(bits).word, m);
            EXPECT_EQ(BitString::parse(bits.str()), bits);
        }
    }
}

TEST(comb, bitstring_validation) {
    EXPECT_THROW(BitString::parse(""), UsageError);
    EXPECT_THROW(BitString::parse("012"), UsageError);
    EXPECT_THROW(BitString::parse("10101010101010101"), UsageError);
    EXPECT_THROW(BitString({0, 2}), UsageError);
}

TEST(comb, encode_examples) {
    const double alpha = 0.25, beta = -0.5;
    const auto psi1 = encode({{BitString::parse("000"), alpha}, {BitString::parse("100"), beta}}, 3);
    EXPECT_EQ(psi1, Multivector(3, {alpha, beta, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(encode({}, 3), Multivector(3));

    const auto fig2 = encode(fig2_table(), 3);
    // Canonical order is by blade word: 1, b1, b2, b1b2, b3, b1b3, b2b3, b1b2b3.
    EXPECT_EQ(fig2, Multivector(3, {-0.07, 0.32, -3.08, -0.85, 1.06, 0.27, -0.86, 4.07}));
}

TEST(comb, encode_rejects_wrong_key_length) {
    EXPECT_THROW(encode({{BitString::parse("10"), 1.0}}, 3), UsageError);
    EXPECT_THROW(encode({{BitString::parse("1"), NAN}}, 1), UsageError);
}

TEST(comb, decode_examples) {
    const double alpha = 0.6, beta = 0.8;
    const auto table = decode(Multivector(3, {alpha, 0, 0, 0, beta, 0, 0, 0}));
    ASSERT_EQ(table.size(), 8u);
    for (const auto& [bits, v] : table) {
        if (bits.str() == "000") {
            EXPECT_EQ(v, alpha);
        } else if (bits.str() == "001") {
            EXPECT_EQ(v, beta);
        } else {
            EXPECT_EQ(v, 0.0);
        }
    }
    for (const auto& [bits, v] : decode(Multivector(3))) EXPECT_EQ(v, 0.0);
}

TEST(comb, decode_inverts_encode_exactly) {
    Rng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 1 + static_cast<int>(rng.below(6));
        CombTable table;
        for (std::uint32_t m = 0; m < (1u << dim); ++m) {
            table.emplace(BitString::of({m}, dim), rng.uniform(-1e6, 1e6));
        }
        EXPECT_EQ(decode(encode(table, dim)), table);
    }
}

TEST(comb, disjoint_supports_multiply_without_signs) {
    // f on bit 1 only, g on bits 2 and 3 only: product coefficients are plain products.
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const double f0 = rng.uniform(-1, 1), f1 = rng.uniform(-1, 1);
        std::vector<double> g(4);
        for (double& v : g) v = rng.uniform(-1, 1);
        const auto fm = encode({{BitString::parse("000"), f0}, {BitString::parse("100"), f1}}, 3);
        const auto gm = encode({{BitString::parse("000"), g[0]}, {BitString::parse("010"), g[1]},
                                {BitString::parse("001"), g[2]}, {BitString::parse("011"), g[3]}},
                               3);
        const auto prod = geometric_product(fm, gm);
        for (std::uint32_t hi = 0; hi < 4; ++hi) {
            for (std::uint32_t lo = 0; lo < 2; ++lo) {
                EXPECT_EQ(prod[(hi << 1) | lo], (lo ? f1 : f0) * g[hi]);
            }
        }
    }
}

TEST(comb, bell_carrier) {
    const auto phi = bell_carrier();
    EXPECT_EQ(phi[0], 0.7071067811865475);
    EXPECT_EQ(phi[0b110], 0.7071067811865475);
    for (std::uint32_t m : {1u, 2u, 3u, 4u, 5u, 7u}) EXPECT_EQ(phi[m], 0.0);
    EXPECT_NEAR(phi.norm(), 1.0, 1e-15);
}

TEST(comb, bell_carrier_square) {
    // (1 + b2b3)^2 / 2 = (1 + 2 b2b3 + b2b3b2b3) / 2 and b2b3b2b3 = -1,
    // so the square is exactly b2b3 with no scalar part.
    const auto sq = geometric_product(bell_carrier(), bell_carrier());
    EXPECT_NEAR(sq[0], 0.0, 1e-15);
    EXPECT_NEAR(sq[0b110], 1.0, 1e-15);
    EXPECT_LE(max_abs_diff(sq, Multivector::blade(3, {0b110})), 1e-15);
}

TEST(comb, bell_basis) {
    const auto basis = bell_basis();
    const double r = 1 / std::sqrt(2.0);
    EXPECT_LE(max_abs_diff(basis[0], Multivector(3, {r, 0, 0, r, 0, 0, 0, 0})), 0.0);
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(basis[i].norm(), 1.0, 1e-15);
        for (int j = i + 1; j < 4; ++j) EXPECT_EQ(dot(basis[i], basis[j]), 0.0);
    }
}

TEST(comb, cell_index_parse) {
    EXPECT_EQ(CellIndex::parse("2,0,1"), (CellIndex{2, 0, 1}));
    EXPECT_EQ(CellIndex::parse("-3"), (CellIndex{-3}));
    EXPECT_EQ(CellIndex::parse("4,5").str(), "4,5");
    EXPECT_THROW(CellIndex::parse(""), UsageError);
    EXPECT_THROW(CellIndex::parse("1,,2"), UsageError);
    EXPECT_THROW(CellIndex::parse("1,2,3,4"), UsageError);
    EXPECT_THROW(CellIndex::parse("a"), UsageError);
    EXPECT_THROW(CellIndex::parse("1x"), UsageError);
}

TEST(comb, lattice_set_get) {
    Rng rng(4);
    const auto mv = rng.multivector(3);
    const LatticeMultivector empty;
    const auto lat = empty.set({2, 0, 1}, mv);
    EXPECT_EQ(lat.get({2, 0, 1}), mv);
    EXPECT_EQ(lat.get({0, 0, 0}), Multivector(3));
    EXPECT_EQ(empty.size(), 0u);  // set returns a new value
    EXPECT_THROW(lat.set({1}, Multivector(2)), UsageError);
}

TEST(comb, cellwise_circuit_commutes_with_set_order) {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<CellIndex, Multivector>> items;
        for (int i = 0; i < 12; ++i) {
            items.emplace_back(CellIndex{int(rng.below(4)), int(rng.below(4))}, rng.multivector(3));
        }
        const Circuit circ = rng.circuit(3, 10);

        // Apply then set, in forward order.
        LatticeMultivector after;
        for (const auto& [n, mv] : items) after = after.set(n, apply_circuit(circ, mv));
        // Set in forward order, then apply cell-wise.
        LatticeMultivector before;
        for (const auto& [n, mv] : items) before = before.set(n, mv);
        EXPECT_EQ(apply_circuit_cellwise(circ, before), after);
        EXPECT_EQ(apply_circuit_cellwise(circ, before, 1), apply_circuit_cellwise(circ, before, 4));
    }
}
