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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "geotele/clifford.hpp"
#include "geotele/gates.hpp"

namespace geotele {

/**
 * Reproducible random source: std::mt19937_64 (its output sequence is fixed by
 * the standard) with doubles taken from the top 53 bits. Standard library
 * distributions are avoided since their algorithms vary between vendors.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * n); }

    /// (cos t, sin t) for t uniform in [0, 2 pi).
    std::pair<double, double> unit_pair() {
        const double t = 2.0 * std::numbers::pi * uniform();
        return {std::cos(t), std::sin(t)};
    }

    Multivector multivector(int dim, double lo = -1.0, double hi = 1.0) {
        std::vector<double> c(std::size_t{1} << dim);
        for (double& v : c) v = uniform(lo, hi);
        return Multivector(dim, std::move(c));
    }

    /// Any well-formed gate on `dim` bits.
    Gate gate(int dim) {
        const auto kind = static_cast<GateKind>(below(dim >= 2 ? 5 : 3));
        const int target = 1 + static_cast<int>(below(dim));
        if (kind != GateKind::CX && kind != GateKind::CZ) return {kind, target, std::nullopt};
        int control = 1 + static_cast<int>(below(dim - 1));
        if (control >= target) ++control;
        return {kind, target, control};
    }

    Circuit circuit(int dim, std::size_t length) {
        Circuit c;
        for (std::size_t i = 0; i < length; ++i) c.gates.push_back(gate(dim));
        return c;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace geotele
