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


#include "geotele/gates.hpp"

#include <cmath>
#include <string>

#include "gtest/gtest.h"

#include "geotele/random.hpp"
#include "geotele/verify.hpp"

using namespace geotele;

namespace {

Multivector c(const std::string& label, double v = 1.0) {
    return Multivector::blade(3, comb(BitString::parse(label)), v);
}

constexpr double kTol = 1e-12;

}  // namespace

TEST(gates, x_examples) {
    EXPECT_EQ(apply_x(c("100"), 1), c("000"));
    const double alpha = 0.3, beta = 0.9;
    const Multivector in(3, {alpha, beta, 0, 0, 0, 0, 0, 0});
    // alpha + beta b1 -> alpha b2 + beta b1b2
    EXPECT_EQ(apply_x(in, 2), Multivector(3, {0, 0, alpha, beta, 0, 0, 0, 0}));
    Rng rng(1);
    const auto mv = rng.multivector(3);
    EXPECT_EQ(apply_x(apply_x(mv, 1), 1), mv);
}

TEST(gates, z_examples) {
    for (const char* label : {"010", "011", "110", "111"}) EXPECT_EQ(apply_z(c(label), 2), c(label, -1));
    EXPECT_EQ(apply_z(Multivector::scalar(3, 2.5), 3), Multivector::scalar(3, 2.5));

    const Multivector fig2(3, {-0.07, 0.32, -3.08, -0.85, 1.06, 0.27, -0.86, 4.07});
    // psi_{1BC} negated: words with bit 0 set.
    EXPECT_EQ(apply_z(fig2, 1), Multivector(3, {-0.07, -0.32, -3.08, 0.85, 1.06, -0.27, -0.86, -4.07}));
}

TEST(gates, h_examples) {
    const double r = kInvSqrt2;
    EXPECT_EQ(apply_h(Multivector::scalar(3, 1), 1), Multivector(3, {r, r, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(apply_h(c("100"), 1), Multivector(3, {r, -r, 0, 0, 0, 0, 0, 0}));
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto mv = rng.multivector(3);
        for (int k = 1; k <= 3; ++k) {
            EXPECT_LE(max_abs_diff(apply_h(apply_h(mv, k), k), mv), kTol);
            // Definition (X + Z) / sqrt 2.
            EXPECT_LE(max_abs_diff(apply_h(mv, k), kInvSqrt2 * (apply_x(mv, k) + apply_z(mv, k))),
                      1e-15);
        }
    }
}

TEST(gates, cx_examples) {
    EXPECT_EQ(apply_cx(c("101"), 2, 1), c("111"));
    EXPECT_EQ(apply_cx(c("110"), 3, 2), c("111"));
    EXPECT_EQ(apply_cx(c("000"), 2, 1), c("000"));
}

TEST(gates, cz_examples) {
    EXPECT_EQ(apply_cz(c("111"), 3, 1), c("111", -1));
    EXPECT_EQ(apply_cz(c("110"), 3, 1), c("110"));
    EXPECT_EQ(apply_cz(c("001"), 3, 1), c("001"));
}

TEST(gates, index_errors) {
    const Multivector mv(3);
    EXPECT_THROW(apply_x(mv, 0), UsageError);
    EXPECT_THROW(apply_z(mv, 4), UsageError);
    EXPECT_THROW(apply_h(mv, -1), UsageError);
    EXPECT_THROW(apply_cx(mv, 2, 2), UsageError);
    EXPECT_THROW(apply_cx(mv, 2, 4), UsageError);
    EXPECT_THROW(apply_cz(mv, 0, 1), UsageError);
    EXPECT_THROW(apply_gate(Gate{GateKind::CX, 1, std::nullopt}, mv), UsageError);
    EXPECT_THROW(apply_gate(Gate{GateKind::X, 1, 2}, mv), UsageError);
    EXPECT_THROW(apply_circuit(Circuit{{Gate::x(1), Gate::x(5)}}, mv), UsageError);
}

// Every nontrivial action listed for the teleportation gate set.
TEST(gates, listed_action_table) {
    struct Row {
        Gate g;
        const char* in;
        const char* out;
        double sign;
    };
    const Row rows[] = {
        {Gate::cx(2, 1), "100", "110", 1}, {Gate::cx(2, 1), "101", "111", 1},
        {Gate::cx(2, 1), "110", "100", 1}, {Gate::cx(2, 1), "111", "101", 1},
        {Gate::cx(3, 2), "010", "011", 1}, {Gate::cx(3, 2), "011", "010", 1},
        {Gate::cx(3, 2), "110", "111", 1}, {Gate::cx(3, 2), "111", "110", 1},
        {Gate::cz(3, 1), "100", "100", 1}, {Gate::cz(3, 1), "101", "101", -1},
        {Gate::cz(3, 1), "110", "110", 1}, {Gate::cz(3, 1), "111", "111", -1},
    };
    for (const auto& row : rows) {
        EXPECT_EQ(apply_gate(row.g, c(row.in)), c(row.out, row.sign))
            << row.g.str() << " c_" << row.in;
    }
    // X_1 c_{1BC} = c_{0BC}, X_1 c_{0BC} = c_{1BC}, X_2 c_{A1C} = c_{A0C},
    // X_2 c_{A0C} = c_{A1C}, Z_1 c_{1BC} = -c_{1BC}, Z_2 c_{A1C} = -c_{A1C}.
    for (char p : {'0', '1'}) {
        for (char q : {'0', '1'}) {
            const std::string bc{p, q};
            auto a = [&](char mid) { return std::string{p, mid, q}; };
            EXPECT_EQ(apply_x(c("1" + bc), 1), c("0" + bc));
            EXPECT_EQ(apply_x(c("0" + bc), 1), c("1" + bc));
            EXPECT_EQ(apply_x(c(a('1')), 2), c(a('0')));
            EXPECT_EQ(apply_x(c(a('0')), 2), c(a('1')));
            EXPECT_EQ(apply_z(c("1" + bc), 1), c("1" + bc, -1));
            EXPECT_EQ(apply_z(c(a('1')), 2), c(a('1'), -1));
            // Trivial on the complementary half.
            EXPECT_EQ(apply_z(c("0" + bc), 1), c("0" + bc));
            EXPECT_EQ(apply_z(c(a('0')), 2), c(a('0')));
        }
    }
}

TEST(gates, blade_language_table) {
    auto blade = [](std::uint32_t w, double v = 1.0) { return Multivector::blade(3, {w}, v); };
    const std::uint32_t b1 = 0b001, b2 = 0b010, b12 = 0b011, b13 = 0b101, b23 = 0b110, b123 = 0b111;
    EXPECT_EQ(apply_cx(blade(b1), 2, 1), blade(b12));
    EXPECT_EQ(apply_cx(blade(b12), 2, 1), blade(b1));
    EXPECT_EQ(apply_cx(blade(b13), 2, 1), blade(b123));
    EXPECT_EQ(apply_cx(blade(b123), 2, 1), blade(b13));
    EXPECT_EQ(apply_cx(blade(b2), 3, 2), blade(b23));
    EXPECT_EQ(apply_cx(blade(b23), 3, 2), blade(b2));
    EXPECT_EQ(apply_cx(blade(b12), 3, 2), blade(b123));
    EXPECT_EQ(apply_cx(blade(b123), 3, 2), blade(b12));
    EXPECT_EQ(apply_cz(blade(b13), 3, 1), blade(b13, -1));
    EXPECT_EQ(apply_cz(blade(b123), 3, 1), blade(b123, -1));
    // Remaining blades are fixed.
    for (std::uint32_t w : {0u, b2, 0b100u, b23}) EXPECT_EQ(apply_cx(blade(w), 2, 1), blade(w));
    for (std::uint32_t w : {0u, b1, 0b100u, b13}) EXPECT_EQ(apply_cx(blade(w), 3, 2), blade(w));
}

TEST(gates, gates_are_not_left_multiplication) {
    // b2 * b1b2 = -b1, but X_2 c_{110} = +c_{100}.
    const auto left = geometric_product(Multivector::generator(3, 2), c("110"));
    EXPECT_EQ(left, c("100", -1));
    EXPECT_EQ(apply_x(c("110"), 2), c("100"));
}

TEST(gates, involutions_and_norm) {
    Rng rng(33);
    const auto gates = all_gates(3);
    for (int i = 0; i < 100; ++i) {
        const auto mv = rng.multivector(3);
        for (const Gate& g : gates) {
            const auto once = apply_gate(g, mv);
            EXPECT_LE(max_abs_diff(apply_gate(g, once), mv), kTol) << g.str();
            EXPECT_NEAR(once.norm(), mv.norm(), kTol) << g.str();
        }
    }
}

TEST(gates, linearity) {
    Rng rng(34);
    for (int i = 0; i < 50; ++i) {
        const auto a = rng.multivector(3);
        const auto b = rng.multivector(3);
        const double s = rng.uniform(-3, 3);
        for (const Gate& g : all_gates(3)) {
            EXPECT_LE(max_abs_diff(apply_gate(g, a + b), apply_gate(g, a) + apply_gate(g, b)), 1e-15);
            EXPECT_LE(max_abs_diff(apply_gate(g, s * a), s * apply_gate(g, a)), 1e-15);
        }
    }
}

TEST(gates, circuit_composition) {
    Rng rng(5);
    const auto mv = rng.multivector(3);
    EXPECT_EQ(apply_circuit({}, mv), mv);
    EXPECT_EQ(apply_circuit({{Gate::x(1), Gate::x(1)}}, mv), mv);
    // First listed gate acts first: X_1 then Z_1 on the scalar gives -b1.
    EXPECT_EQ(apply_circuit({{Gate::x(1), Gate::z(1)}}, Multivector::scalar(3, 1)), c("100", -1));
}

TEST(gates, teleport_network_shape) {
    const auto net = teleport_network();
    ASSERT_EQ(net.gates.size(), 6u);
    EXPECT_EQ(net.gates.front(), Gate::cx(2, 1));
    EXPECT_EQ(net.gates[1], Gate::h(1));
    EXPECT_EQ(net.gates[2], Gate::cx(3, 2));
    EXPECT_EQ(net.gates[3], Gate::cz(3, 1));
    EXPECT_EQ(net.gates[4], Gate::h(2));
    EXPECT_EQ(net.gates.back(), Gate::h(1));
}

TEST(gates, teleport_examples) {
    EXPECT_LE(max_abs_diff(teleport(1, 0), Multivector::scalar(3, 1)), kTol);
    EXPECT_LE(max_abs_diff(teleport(0, 1), c("001")), kTol);
    const auto out = teleport(0.6, 0.8);
    EXPECT_NEAR(out[0], 0.6, kTol);
    EXPECT_NEAR(out[0b100], 0.8, kTol);
    for (std::uint32_t m : {1u, 2u, 3u, 5u, 6u, 7u}) EXPECT_NEAR(out[m], 0.0, kTol);
}

TEST(gates, teleport_identity_random) {
    Rng rng(2026);
    for (int i = 0; i < 1000; ++i) {
        const auto [alpha, beta] = rng.unit_pair();
        EXPECT_LE(max_abs_diff(teleport(alpha, beta), Multivector(3, {alpha, 0, 0, 0, beta, 0, 0, 0})),
                  kTol);
    }
}

TEST(gates, teleport_is_linear_for_unnormalized_input) {
    EXPECT_LE(max_abs_diff(teleport(3, -4), Multivector(3, {3, 0, 0, 0, -4, 0, 0, 0})), 1e-12);
}
