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


#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "geotele/clifford.hpp"
#include "geotele/gates.hpp"
#include "geotele/oracle.hpp"
#include "geotele/random.hpp"

/**
 * @file
 * Seeded self-check of the gate engine against the reference simulator and
 * of the algebraic laws it relies on. Backs the `verify` CLI subcommand.
 */

namespace geotele {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

/// Every well-formed gate on `dim` bits.
inline std::vector<Gate> all_gates(int dim) {
    std::vector<Gate> gates;
    for (int k = 1; k <= dim; ++k) {
        gates.push_back(Gate::x(k));
        gates.push_back(Gate::z(k));
        gates.push_back(Gate::h(k));
        for (int l = 1; l <= dim; ++l) {
            if (l == k) continue;
            gates.push_back(Gate::cx(k, l));
            gates.push_back(Gate::cz(k, l));
        }
    }
    return gates;
}

inline VerifyReport run_verification(std::uint64_t seed, std::size_t trials) {
    constexpr double tol = 1e-12;
    VerifyReport report;
    auto add = [&](std::string name, double dev, double t) {
        report.checks.push_back({std::move(name), dev, t, dev <= t});
    };
    Rng rng(seed);

    {
        double dev = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const auto [alpha, beta] = rng.unit_pair();
            const Multivector expected(3, {alpha, 0, 0, 0, beta, 0, 0, 0});
            dev = std::max(dev, max_abs_diff(teleport(alpha, beta), expected));
        }
        add("teleport identity", dev, tol);
    }
    {
        double dev = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const auto [alpha, beta] = rng.unit_pair();
            dev = std::max(dev, oracle::equivalence_check(teleport(alpha, beta),
                                                          oracle::sv_teleport(alpha, beta))
                                    .max_deviation);
        }
        add("teleport vs state-vector oracle", dev, tol);
    }
    {
        double dev = 0.0;
        for (const Gate& g : all_gates(3)) {
            for (std::uint32_t m = 0; m < 8; ++m) {
                const auto mv = apply_gate(g, Multivector::blade(3, BladeIndex{m}));
                const auto sv = oracle::sv_apply_gate(oracle::StateVector::basis(3, m), g);
                dev = std::max(dev, oracle::equivalence_check(mv, sv).max_deviation);
            }
        }
        add("single gates on basis combs vs oracle", dev, 0.0);
    }
    {
        double dev = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const Multivector mv = rng.multivector(3);
            const Circuit circ = rng.circuit(3, 20);
            const oracle::StateVector sv(3, {mv.coeffs().begin(), mv.coeffs().end()});
            dev = std::max(dev, oracle::equivalence_check(apply_circuit(circ, mv),
                                                          oracle::sv_apply_circuit(circ, sv))
                                    .max_deviation);
        }
        add("random 20-gate circuits vs oracle", dev, tol);
    }
    {
        double inv = 0.0, norm = 0.0;
        const auto gates = all_gates(3);
        for (std::size_t i = 0; i < trials; ++i) {
            const Multivector mv = rng.multivector(3);
            for (const Gate& g : gates) {
                const Multivector once = apply_gate(g, mv);
                inv = std::max(inv, max_abs_diff(apply_gate(g, once), mv));
                norm = std::max(norm, std::abs(once.norm() - mv.norm()));
            }
        }
        add("gate involutions", inv, tol);
        add("gate norm preservation", norm, tol);
    }
    {
        double dev = 0.0;
        for (int k = 1; k <= 3; ++k) {
            const auto bk = Multivector::generator(3, k);
            dev = std::max(dev, max_abs_diff(geometric_product(bk, bk), Multivector::scalar(3, 1)));
            for (int l = 1; l <= 3; ++l) {
                if (l == k) continue;
                const auto bl = Multivector::generator(3, l);
                dev = std::max(dev, max_abs_diff(geometric_product(bk, bl),
                                                 -1.0 * geometric_product(bl, bk)));
            }
        }
        add("generator relations", dev, 0.0);
    }
    {
        double dev = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const auto a = rng.multivector(3, -10, 10);
            const auto b = rng.multivector(3, -10, 10);
            const auto c = rng.multivector(3, -10, 10);
            dev = std::max(dev, max_abs_diff(geometric_product(geometric_product(a, b), c),
                                             geometric_product(a, geometric_product(b, c))));
        }
        add("geometric product associativity", dev, 1e-10);
    }
    return report;
}

}  // namespace geotele
