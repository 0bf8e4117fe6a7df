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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geotele/clifford.hpp"

namespace geotele {

/// Binary label (A_1, ..., A_n) of a comb c_{A_1...A_n} = b_1^{A_1} ... b_n^{A_n}.
class BitString {
  public:
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty() || bits_.size() > static_cast<std::size_t>(kMaxDim)) {
            throw UsageError("bit string length must be in [1, 16]");
        }
        for (auto b : bits_) {
            if (b > 1) throw UsageError("bit string entries must be 0 or 1");
        }
    }

    /// Parses the textual key "A1A2...An", e.g. "101" for c_{101} = b_1 b_3.
    static BitString parse(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char ch : text) {
            if (ch != '0' && ch != '1') {
                throw UsageError("invalid comb key '" + std::string(text) + "'");
            }
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return BitString(std::move(bits));
    }

    /// Inverse of comb(): the label of blade `m` in dimension `dim`.
    static BitString of(BladeIndex m, int dim) {
        detail::check_dim(dim);
        if (m.word >= (std::uint32_t{1} << dim)) throw UsageError("blade index out of range");
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) bits[k] = (m.word >> k) & 1u;
        return BitString(std::move(bits));
    }

    int size() const noexcept { return static_cast<int>(bits_.size()); }
    /// A_k, 1-based.
    std::uint8_t bit(int k) const { return bits_.at(static_cast<std::size_t>(k - 1)); }

    std::string str() const {
        std::string s;
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

  private:
    std::vector<std::uint8_t> bits_;
};

inline BladeIndex comb(const BitString& bits) {
    std::uint32_t word = 0;
    for (int k = 1; k <= bits.size(); ++k) word |= std::uint32_t{bits.bit(k)} << (k - 1);
    return BladeIndex{word};
}

/// Coefficient table psi_{A_1...A_n}.
using CombTable = std::map<BitString, double>;

/// Sum of value * comb(key) over the table. Missing keys contribute zero.
inline Multivector encode(const CombTable& table, int dim) {
    MultivectorBuilder out(dim);
    for (const auto& [key, value] : table) {
        if (key.size() != dim) {
            throw UsageError("comb key '" + key.str() + "' does not have length " +
                             std::to_string(dim));
        }
        out[comb(key).word] = value;
    }
    return std::move(out).build();
}

/// Total table with one entry per blade, including zeros.
inline CombTable decode(const Multivector& mv) {
    CombTable table;
    for (std::uint32_t m = 0; m < mv.size(); ++m) {
        table.emplace(BitString::of(BladeIndex{m}, mv.dim()), mv[m]);
    }
    return table;
}

// 1/sqrt(2) as produced by 1.0 / std::sqrt(2.0), one ulp below sqrt(0.5).
inline constexpr double kInvSqrt2 = 0.7071067811865475;

/// The carrier (1 + b_2 b_3) / sqrt(2) in Cl(3).
inline Multivector bell_carrier() {
    return Multivector(3, {kInvSqrt2, 0, 0, 0, 0, 0, kInvSqrt2, 0});
}

/**
 * Multivector analogues of the Bell basis on bits 1 and 2, in Cl(3):
 * (1 + b1b2)/sqrt2, (1 - b1b2)/sqrt2, (b1 + b2)/sqrt2, (b1 - b2)/sqrt2.
 */
inline std::array<Multivector, 4> bell_basis() {
    const double h = kInvSqrt2;
    return {
        Multivector(3, {h, 0, 0, h, 0, 0, 0, 0}),
        Multivector(3, {h, 0, 0, -h, 0, 0, 0, 0}),
        Multivector(3, {0, h, h, 0, 0, 0, 0, 0}),
        Multivector(3, {0, h, -h, 0, 0, 0, 0, 0}),
    };
}

/// Lattice cell label: 1 to 3 integers, (N), (N1, N2) or (N1, N2, N3).
class CellIndex {
  public:
    CellIndex(std::initializer_list<int> parts) : CellIndex(std::vector<int>(parts)) {}

    explicit CellIndex(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty() || parts_.size() > 3) {
            throw UsageError("cell index must have 1 to 3 components");
        }
    }

    /// Parses "i", "i,j" or "i,j,k".
    static CellIndex parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (true) {
            const auto comma = text.find(',', pos);
            const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                                : comma - pos);
            try {
                std::size_t used = 0;
                const std::string s(piece);
                const int v = std::stoi(s, &used);
                if (used != s.size()) throw std::invalid_argument("trailing");
                parts.push_back(v);
            } catch (const std::exception&) {
                throw UsageError("invalid cell index '" + std::string(text) + "'");
            }
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return CellIndex(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Component i (0-based); missing trailing components read as 0.
    int at(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const CellIndex&, const CellIndex&) = default;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;

  private:
    std::vector<int> parts_;
};

/**
 * Finitely supported family of Cl(3) multivectors indexed by lattice cell.
 * Cells that were never set read as zero. Updates return a new lattice.
 */
class LatticeMultivector {
  public:
    using Cells = std::map<CellIndex, Multivector>;

    LatticeMultivector() = default;

    explicit LatticeMultivector(Cells cells) : cells_(std::move(cells)) {
        for (const auto& [n, mv] : cells_) {
            if (mv.dim() != 3) throw UsageError("lattice cell " + n.str() + " is not dimension 3");
        }
    }

    [[nodiscard]] LatticeMultivector set(const CellIndex& n, const Multivector& mv) const {
        if (mv.dim() != 3) throw UsageError("lattice cells must hold dimension-3 multivectors");
        LatticeMultivector out = *this;
        out.cells_.insert_or_assign(n, mv);
        return out;
    }

    Multivector get(const CellIndex& n) const {
        const auto it = cells_.find(n);
        return it == cells_.end() ? Multivector(3) : it->second;
    }

    bool contains(const CellIndex& n) const { return cells_.contains(n); }
    std::size_t size() const noexcept { return cells_.size(); }
    const Cells& cells() const noexcept { return cells_; }

    friend bool operator==(const LatticeMultivector&, const LatticeMultivector&) = default;

  private:
    Cells cells_;
};

}  // namespace geotele
