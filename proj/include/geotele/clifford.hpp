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
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geotele/errors.hpp"

/**
 * @file
 * Dense real Euclidean Clifford algebra Cl(n, 0).
 *
 * A basis blade b_{k1} b_{k2} ... b_{kj} (k1 < ... < kj) is identified by a
 * binary word whose bit k-1 is set iff b_k is a factor. b_1 is word 0b001,
 * b_2 b_3 is word 0b110. A multivector stores one real coefficient per word.
 */

namespace geotele {

inline constexpr int kMaxDim = 16;

/// Binary word naming a basis blade.
struct BladeIndex {
    std::uint32_t word = 0;

    constexpr int grade() const noexcept { return std::popcount(word); }
    constexpr bool has(int k) const noexcept { return (word >> (k - 1)) & 1u; }

    friend constexpr bool operator==(BladeIndex, BladeIndex) = default;
};

/// Result of multiplying two basis blades: another blade and a sign.
struct SignedBlade {
    BladeIndex blade;
    int sign = 1;

    friend constexpr bool operator==(SignedBlade, SignedBlade) = default;
};

namespace detail {

inline void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw UsageError("dimension must be in [1, " + std::to_string(kMaxDim) +
                         "], got " + std::to_string(dim));
    }
}

// Number of transpositions needed to move every generator of `b` past the
// generators of `a` with a higher index. Squares of generators are +1.
constexpr int reorder_sign(std::uint32_t a, std::uint32_t b) noexcept {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

}  // namespace detail

/// Geometric product of two basis blades in Cl(dim, 0).
inline SignedBlade blade_product(BladeIndex m1, BladeIndex m2, int dim) {
    detail::check_dim(dim);
    const std::uint32_t limit = std::uint32_t{1} << dim;
    if (m1.word >= limit || m2.word >= limit) {
        throw UsageError("blade index out of range for dimension " + std::to_string(dim));
    }
    return {BladeIndex{m1.word ^ m2.word}, detail::reorder_sign(m1.word, m2.word)};
}

/**
 * Element of Cl(dim, 0) stored as 2^dim dense coefficients.
 *
 * coeffs()[m] is the coefficient of the blade with word m. Coefficients must
 * be finite; the constructor taking a coefficient vector enforces that.
 */
class Multivector {
  public:
    explicit Multivector(int dim) : dim_(dim) {
        detail::check_dim(dim);
        coeffs_.assign(std::size_t{1} << dim, 0.0);
    }

    Multivector(int dim, std::vector<double> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
        detail::check_dim(dim);
        if (coeffs_.size() != (std::size_t{1} << dim)) {
            throw UsageError("expected " + std::to_string(std::size_t{1} << dim) +
                             " coefficients, got " + std::to_string(coeffs_.size()));
        }
        for (double c : coeffs_) {
            if (!std::isfinite(c)) throw UsageError("multivector coefficients must be finite");
        }
    }

    static Multivector scalar(int dim, double value) {
        Multivector mv(dim);
        mv.coeffs_[0] = value;
        return mv;
    }

    static Multivector blade(int dim, BladeIndex m, double value = 1.0) {
        Multivector mv(dim);
        if (m.word >= mv.size()) throw UsageError("blade index out of range");
        mv.coeffs_[m.word] = value;
        return mv;
    }

    /// Basis vector b_k, 1-based.
    static Multivector generator(int dim, int k) {
        if (k < 1 || k > dim) throw UsageError("generator index out of range");
        return blade(dim, BladeIndex{std::uint32_t{1} << (k - 1)});
    }

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    double operator[](std::size_t m) const { return coeffs_.at(m); }
    double operator[](BladeIndex m) const { return coeffs_.at(m.word); }

    /// Returns a copy with one coefficient replaced.
    Multivector with(BladeIndex m, double value) const {
        if (!std::isfinite(value)) throw UsageError("multivector coefficients must be finite");
        Multivector out = *this;
        out.coeffs_.at(m.word) = value;
        return out;
    }

    /// Euclidean norm of the coefficient sequence.
    double norm() const noexcept {
        double s = 0.0;
        for (double c : coeffs_) s += c * c;
        return std::sqrt(s);
    }

    friend bool operator==(const Multivector&, const Multivector&) = default;

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        require_same_dim(a, b);
        Multivector out = a;
        for (std::size_t m = 0; m < out.size(); ++m) out.coeffs_[m] += b.coeffs_[m];
        return out;
    }

    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        require_same_dim(a, b);
        Multivector out = a;
        for (std::size_t m = 0; m < out.size(); ++m) out.coeffs_[m] -= b.coeffs_[m];
        return out;
    }

    friend Multivector operator*(double s, const Multivector& a) {
        Multivector out = a;
        for (double& c : out.coeffs_) c *= s;
        return out;
    }
    friend Multivector operator*(const Multivector& a, double s) { return s * a; }

    static void require_same_dim(const Multivector& a, const Multivector& b) {
        if (a.dim_ != b.dim_) {
            throw UsageError("dimension mismatch: " + std::to_string(a.dim_) + " vs " +
                             std::to_string(b.dim_));
        }
    }

  private:
    // Gate kernels write coefficients directly; see gates.hpp.
    friend class MultivectorBuilder;

    int dim_;
    std::vector<double> coeffs_;
};

/// Mutable staging area for building a Multivector coefficient by coefficient.
class MultivectorBuilder {
  public:
    explicit MultivectorBuilder(int dim) : mv_(dim) {}
    explicit MultivectorBuilder(Multivector mv) : mv_(std::move(mv)) {}

    std::size_t size() const noexcept { return mv_.size(); }
    double& operator[](std::size_t m) { return mv_.coeffs_[m]; }
    std::span<double> coeffs() noexcept { return mv_.coeffs_; }

    Multivector build() && {
        for (double c : mv_.coeffs_) {
            if (!std::isfinite(c)) throw UsageError("multivector coefficients must be finite");
        }
        return std::move(mv_);
    }

  private:
    Multivector mv_;
};

/// Bilinear extension of blade_product over all coefficient pairs.
inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
    Multivector::require_same_dim(a, b);
    MultivectorBuilder out(a.dim());
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    for (std::uint32_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0.0) continue;
        for (std::uint32_t j = 0; j < bc.size(); ++j) {
            if (bc[j] == 0.0) continue;
            out[i ^ j] += detail::reorder_sign(i, j) * ac[i] * bc[j];
        }
    }
    return std::move(out).build();
}

/**
 * Symmetrized product (ab + ba) / 2.
 *
 * Coincides with the usual dot product for vectors. For higher grades this is
 * NOT the grade-lowering contraction; it is literally the symmetric part of
 * the geometric product.
 */
inline Multivector inner_product(const Multivector& a, const Multivector& b) {
    return 0.5 * (geometric_product(a, b) + geometric_product(b, a));
}

/// Antisymmetrized product (ab - ba) / 2. Same caveat as inner_product.
inline Multivector outer_product(const Multivector& a, const Multivector& b) {
    return 0.5 * (geometric_product(a, b) - geometric_product(b, a));
}

/// Keeps the grade-g part of `a`.
inline Multivector grade_projection(const Multivector& a, int g) {
    if (g < 0 || g > a.dim()) {
        throw UsageError("grade " + std::to_string(g) + " out of range for dimension " +
                         std::to_string(a.dim()));
    }
    MultivectorBuilder out(a);
    for (std::uint32_t m = 0; m < out.size(); ++m) {
        if (std::popcount(m) != g) out[m] = 0.0;
    }
    return std::move(out).build();
}

/// Largest absolute coefficient difference.
inline double max_abs_diff(const Multivector& a, const Multivector& b) {
    Multivector::require_same_dim(a, b);
    double d = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) d = std::max(d, std::abs(a[m] - b[m]));
    return d;
}

}  // namespace geotele
