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
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "geotele/clifford.hpp"
#include "geotele/comb.hpp"

/**
 * @file
 * Pauli, Hadamard and controlled gates acting on multivector coefficients.
 *
 * The gates are coefficient permutations and sign flips keyed on blade bits.
 * They are deliberately not left-multiplications by b_k: b_2 (b_1 b_2) = -b_1
 * carries a reordering sign, while X_2 maps c_{110} to c_{100} with sign +1.
 */

namespace geotele {

enum class GateKind { X, Z, H, CX, CZ };

inline std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
    }
    return "?";
}

inline GateKind parse_gate_kind(std::string_view s) {
    if (s == "X") return GateKind::X;
    if (s == "Z") return GateKind::Z;
    if (s == "H") return GateKind::H;
    if (s == "CX") return GateKind::CX;
    if (s == "CZ") return GateKind::CZ;
    throw UsageError("unknown gate kind '" + std::string(s) + "'");
}

/// One gate. Bit indices are 1-based; `control` is set only for CX and CZ.
struct Gate {
    GateKind kind = GateKind::X;
    int target = 1;
    std::optional<int> control;

    static Gate x(int k) { return {GateKind::X, k, std::nullopt}; }
    static Gate z(int k) { return {GateKind::Z, k, std::nullopt}; }
    static Gate h(int k) { return {GateKind::H, k, std::nullopt}; }
    /// X on bit k controlled by bit l.
    static Gate cx(int k, int l) { return {GateKind::CX, k, l}; }
    /// Z on bit k controlled by bit l.
    static Gate cz(int k, int l) { return {GateKind::CZ, k, l}; }

    bool controlled() const noexcept { return kind == GateKind::CX || kind == GateKind::CZ; }

    std::string str() const {
        std::string s(to_string(kind));
        s += "_" + std::to_string(target);
        if (control) s += "^" + std::to_string(*control);
        return s;
    }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gates in application order: gates.front() acts first.
struct Circuit {
    std::vector<Gate> gates;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Throws UsageError unless `g` is well formed for `dim` bits.
inline void validate_gate(const Gate& g, int dim) {
    auto in_range = [dim](int k) { return k >= 1 && k <= dim; };
    if (!in_range(g.target)) {
        throw UsageError("gate " + g.str() + ": target out of range for dimension " +
                         std::to_string(dim));
    }
    if (g.controlled()) {
        if (!g.control) throw UsageError("gate " + std::string(to_string(g.kind)) + " needs a control bit");
        if (!in_range(*g.control)) {
            throw UsageError("gate " + g.str() + ": control out of range for dimension " +
                             std::to_string(dim));
        }
        if (*g.control == g.target) throw UsageError("gate " + g.str() + ": control equals target");
    } else if (g.control) {
        throw UsageError("gate " + std::string(to_string(g.kind)) + " takes no control bit");
    }
}

namespace detail {

inline std::uint32_t bit_mask(int k) { return std::uint32_t{1} << (k - 1); }

// Swaps coefficient pairs (m, m ^ t) for every m that has all `cmask` bits set.
inline Multivector toggle_where(const Multivector& mv, std::uint32_t t, std::uint32_t cmask) {
    MultivectorBuilder out(mv);
    auto c = out.coeffs();
    for (std::uint32_t m = 0; m < c.size(); ++m) {
        if ((m & t) == 0 && (m & cmask) == cmask) std::swap(c[m], c[m | t]);
    }
    return std::move(out).build();
}

// Negates coefficients of blades containing every bit of `mask`.
inline Multivector negate_where(const Multivector& mv, std::uint32_t mask) {
    MultivectorBuilder out(mv);
    auto c = out.coeffs();
    for (std::uint32_t m = 0; m < c.size(); ++m) {
        if ((m & mask) == mask) c[m] = -c[m];
    }
    return std::move(out).build();
}

}  // namespace detail

/// X_k: adds b_k to blades lacking it and removes it from blades that have it.
inline Multivector apply_x(const Multivector& mv, int k) {
    validate_gate(Gate::x(k), mv.dim());
    return detail::toggle_where(mv, detail::bit_mask(k), 0);
}

/// Z_k: flips the sign of every blade containing b_k.
inline Multivector apply_z(const Multivector& mv, int k) {
    validate_gate(Gate::z(k), mv.dim());
    return detail::negate_where(mv, detail::bit_mask(k));
}

/// H_k = (X_k + Z_k) / sqrt(2).
inline Multivector apply_h(const Multivector& mv, int k) {
    validate_gate(Gate::h(k), mv.dim());
    const std::uint32_t t = detail::bit_mask(k);
    MultivectorBuilder out(mv);
    auto c = out.coeffs();
    for (std::uint32_t m = 0; m < c.size(); ++m) {
        if (m & t) continue;
        const double without = c[m];
        const double with = c[m | t];
        c[m] = kInvSqrt2 * (with + without);
        c[m | t] = kInvSqrt2 * (without - with);
    }
    return std::move(out).build();
}

/// X_k^l: X_k restricted to blades that contain b_l.
inline Multivector apply_cx(const Multivector& mv, int k, int l) {
    validate_gate(Gate::cx(k, l), mv.dim());
    return detail::toggle_where(mv, detail::bit_mask(k), detail::bit_mask(l));
}

/// Z_k^l: negates blades containing both b_k and b_l.
inline Multivector apply_cz(const Multivector& mv, int k, int l) {
    validate_gate(Gate::cz(k, l), mv.dim());
    return detail::negate_where(mv, detail::bit_mask(k) | detail::bit_mask(l));
}

inline Multivector apply_gate(const Gate& g, const Multivector& mv) {
    validate_gate(g, mv.dim());
    switch (g.kind) {
        case GateKind::X: return apply_x(mv, g.target);
        case GateKind::Z: return apply_z(mv, g.target);
        case GateKind::H: return apply_h(mv, g.target);
        case GateKind::CX: return apply_cx(mv, g.target, *g.control);
        case GateKind::CZ: return apply_cz(mv, g.target, *g.control);
    }
    throw UsageError("unknown gate kind");
}

inline Multivector apply_circuit(const Circuit& circ, const Multivector& mv) {
    Multivector out = mv;
    for (const Gate& g : circ.gates) out = apply_gate(g, out);
    return out;
}

/**
 * The network H_1 H_2 Z_3^1 X_3^2 H_1 X_2^1 listed in application order
 * (rightmost operator first): X_2^1, H_1, X_3^2, Z_3^1, H_2, H_1.
 */
inline Circuit teleport_network() {
    return Circuit{{Gate::cx(2, 1), Gate::h(1), Gate::cx(3, 2), Gate::cz(3, 1), Gate::h(2),
                    Gate::h(1)}};
}

/// alpha + beta b_1 times the carrier, the network's input.
inline Multivector teleport_input(double alpha, double beta) {
    const Multivector psi1(3, {alpha, beta, 0, 0, 0, 0, 0, 0});
    return geometric_product(psi1, bell_carrier());
}

/**
 * Runs the teleport network on (alpha + beta b_1)(1 + b_2 b_3)/sqrt(2).
 * The result is alpha + beta b_3. The map is linear, so alpha^2 + beta^2 = 1
 * is not required.
 */
inline Multivector teleport(double alpha, double beta) {
    return apply_circuit(teleport_network(), teleport_input(alpha, beta));
}

/**
 * Applies `circ` to every cell. Cells are processed on up to `threads`
 * workers; each worker writes only its own slots, so the result is identical
 * to a sequential run.
 */
inline LatticeMultivector apply_circuit_cellwise(const Circuit& circ, const LatticeMultivector& lat,
                                                 unsigned threads = 0) {
    for (const Gate& g : circ.gates) validate_gate(g, 3);
    std::vector<CellIndex> keys;
    std::vector<const Multivector*> inputs;
    for (const auto& [n, mv] : lat.cells()) {
        keys.push_back(n);
        inputs.push_back(&mv);
    }
    std::vector<std::optional<Multivector>> outputs(keys.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, keys.size()));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) outputs[i] = apply_circuit(circ, *inputs[i]);
    };
    if (threads <= 1) {
        work(0, keys.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (keys.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < keys.size(); begin += chunk) {
            pool.emplace_back(work, begin, std::min(keys.size(), begin + chunk));
        }
    }

    LatticeMultivector::Cells cells;
    for (std::size_t i = 0; i < keys.size(); ++i) cells.emplace(keys[i], std::move(*outputs[i]));
    return LatticeMultivector(std::move(cells));
}

}  // namespace geotele
