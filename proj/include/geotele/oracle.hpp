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

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "geotele/clifford.hpp"
#include "geotele/gates.hpp"

/**
 * @file
 * Reference tensor-product simulator over real amplitudes.
 *
 * Used to cross-check the multivector gate engine. It shares only the Gate
 * and Circuit descriptors with gates.hpp; gate application here is written
 * independently as 2x2 matrices applied along a bit stride.
 */

namespace geotele::oracle {

/// 2^n real amplitudes; amps[i] belongs to |A_1 ... A_n> with A_k = bit k-1 of i.
class StateVector {
  public:
    explicit StateVector(int dim) : dim_(dim) {
        if (dim < 1 || dim > kMaxDim) throw UsageError("state vector dimension out of range");
        amps_.assign(std::size_t{1} << dim, 0.0);
    }

    StateVector(int dim, std::vector<double> amps) : dim_(dim), amps_(std::move(amps)) {
        if (dim < 1 || dim > kMaxDim) throw UsageError("state vector dimension out of range");
        if (amps_.size() != (std::size_t{1} << dim)) throw UsageError("amplitude count mismatch");
        for (double a : amps_) {
            if (!std::isfinite(a)) throw UsageError("amplitudes must be finite");
        }
    }

    /// Basis ket |i>.
    static StateVector basis(int dim, std::size_t i) {
        StateVector sv(dim);
        sv.amps_.at(i) = 1.0;
        return sv;
    }

    /// Kronecker product in the bit convention used here: `lo` occupies the
    /// low bits (qubits 1..lo.dim), `hi` the bits above it.
    static StateVector tensor(const StateVector& lo, const StateVector& hi) {
        StateVector out(lo.dim_ + hi.dim_);
        for (std::size_t j = 0; j < hi.amps_.size(); ++j) {
            for (std::size_t i = 0; i < lo.amps_.size(); ++i) {
                out.amps_[(j << lo.dim_) | i] = lo.amps_[i] * hi.amps_[j];
            }
        }
        return out;
    }

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return amps_.size(); }
    const std::vector<double>& amps() const noexcept { return amps_; }
    double operator[](std::size_t i) const { return amps_.at(i); }

    friend StateVector sv_apply_gate(const StateVector& sv, const Gate& g);

  private:
    int dim_;
    std::vector<double> amps_;
};

namespace detail {

using Mat2 = std::array<double, 4>;  // row-major [[m00, m01], [m10, m11]]

inline Mat2 matrix_of(GateKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::X:
        case GateKind::CX: return {0, 1, 1, 0};
        case GateKind::Z:
        case GateKind::CZ: return {1, 0, 0, -1};
        case GateKind::H: return {r, r, r, -r};
    }
    return {1, 0, 0, 1};
}

}  // namespace detail

inline StateVector sv_apply_gate(const StateVector& sv, const Gate& g) {
    const int n = sv.dim();
    const bool controlled = g.kind == GateKind::CX || g.kind == GateKind::CZ;
    if (g.target < 1 || g.target > n) throw UsageError("oracle: target out of range");
    if (controlled && (!g.control || *g.control < 1 || *g.control > n || *g.control == g.target)) {
        throw UsageError("oracle: invalid control bit");
    }
    if (!controlled && g.control) throw UsageError("oracle: unexpected control bit");

    const auto u = detail::matrix_of(g.kind);
    const std::size_t stride = std::size_t{1} << (g.target - 1);
    const std::size_t cbit = controlled ? std::size_t{1} << (*g.control - 1) : 0;

    StateVector out = sv;
    auto& a = out.amps_;
    // Walk blocks of 2*stride; within a block, i and i+stride differ only in the target bit.
    for (std::size_t block = 0; block < a.size(); block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            if (controlled && (i & cbit) == 0) continue;
            const double a0 = sv.amps_[i];
            const double a1 = sv.amps_[i + stride];
            a[i] = u[0] * a0 + u[1] * a1;
            a[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
    return out;
}

inline StateVector sv_apply_circuit(const Circuit& circ, const StateVector& sv) {
    StateVector out = sv;
    for (const Gate& g : circ.gates) out = sv_apply_gate(out, g);
    return out;
}

/// (alpha|0> + beta|1>)_1 (x) (|00> + |11>)_23 / sqrt(2) pushed through the six-gate network.
inline StateVector sv_teleport(double alpha, double beta) {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector psi(1, {alpha, beta});
    const StateVector phi(2, {r, 0, 0, r});
    return sv_apply_circuit(teleport_network(), StateVector::tensor(psi, phi));
}

struct Equivalence {
    bool equal = false;
    double max_deviation = 0.0;
};

/// Compares multivector coefficients with amplitudes index by index.
inline Equivalence equivalence_check(const Multivector& mv, const StateVector& sv,
                                     double tol = 1e-12) {
    if (mv.dim() != sv.dim()) {
        throw UsageError("equivalence_check: dimension mismatch " + std::to_string(mv.dim()) +
                         " vs " + std::to_string(sv.dim()));
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < sv.size(); ++i) dev = std::max(dev, std::abs(mv[i] - sv[i]));
    return {dev <= tol, dev};
}

}  // namespace geotele::oracle
