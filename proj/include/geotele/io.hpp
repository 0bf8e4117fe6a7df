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

#include <cstdio>
#include <optional>
#include <string>

#include <json.hpp>

#include "geotele/comb.hpp"
#include "geotele/gates.hpp"

/**
 * @file
 * JSON file formats.
 *
 * Coefficient table: {"000": 0.6, "001": 0.8, ...}. Keys are comb labels
 * A1A2...An; absent keys are zero. Written with every blade present.
 *
 * Lattice: {"0,0,0": <table>, "1,0,0": <table>, ...}. Cells are 3-bit tables.
 *
 * Circuit: [{"kind": "CX", "target": 2, "control": 1}, {"kind": "H", "target": 1}]
 * in application order.
 *
 * Numbers are written with 17 significant digits.
 */

namespace geotele::io {

using json = nlohmann::json;

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

inline CombTable table_from(const json& j, std::optional<int>& dim) {
    if (!j.is_object()) throw UsageError("coefficient table must be a JSON object");
    CombTable table;
    for (const auto& [key, value] : j.items()) {
        const BitString bits = BitString::parse(key);
        if (dim && bits.size() != *dim) {
            throw UsageError("comb key '" + key + "' has length " + std::to_string(bits.size()) +
                             ", expected " + std::to_string(*dim));
        }
        dim = bits.size();
        if (!value.is_number()) throw UsageError("coefficient for '" + key + "' is not a number");
        table.emplace(bits, value.get<double>());
    }
    return table;
}

inline void write_table(std::string& out, const Multivector& mv, const std::string& indent) {
    out += "{";
    bool first = true;
    for (const auto& [bits, value] : decode(mv)) {
        out += first ? "\n" : ",\n";
        first = false;
        out += indent + "  \"" + bits.str() + "\": " + format_number(value);
    }
    out += "\n" + indent + "}";
}

}  // namespace detail

/// Parses a coefficient table. `dim` is required when the table may be empty.
inline Multivector read_table(const std::string& text, std::optional<int> dim = std::nullopt) {
    const CombTable table = detail::table_from(detail::parse_json(text), dim);
    if (!dim) throw UsageError("empty coefficient table: dimension unknown");
    return encode(table, *dim);
}

inline std::string write_table(const Multivector& mv) {
    std::string out;
    detail::write_table(out, mv, "");
    return out + "\n";
}

inline LatticeMultivector read_lattice(const std::string& text) {
    const json j = detail::parse_json(text);
    if (!j.is_object()) throw UsageError("lattice must be a JSON object");
    LatticeMultivector::Cells cells;
    for (const auto& [key, value] : j.items()) {
        std::optional<int> dim = 3;
        const CellIndex n = CellIndex::parse(key);
        if (!cells.emplace(n, encode(detail::table_from(value, dim), 3)).second) {
            throw UsageError("duplicate lattice cell '" + key + "'");
        }
    }
    return LatticeMultivector(std::move(cells));
}

inline std::string write_lattice(const LatticeMultivector& lat) {
    std::string out = "{";
    bool first = true;
    for (const auto& [n, mv] : lat.cells()) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "  \"" + n.str() + "\": ";
        detail::write_table(out, mv, "  ");
    }
    out += lat.size() ? "\n}\n" : "}\n";
    return out;
}

inline Circuit read_circuit(const std::string& text) {
    const json j = detail::parse_json(text);
    if (!j.is_array()) throw UsageError("circuit must be a JSON array");
    Circuit circ;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("kind") || !item.contains("target")) {
            throw UsageError("circuit entries need \"kind\" and \"target\"");
        }
        if (!item["kind"].is_string() || !item["target"].is_number_integer()) {
            throw UsageError("circuit entry has wrong field types");
        }
        Gate g{parse_gate_kind(item["kind"].get<std::string>()), item["target"].get<int>(),
               std::nullopt};
        if (item.contains("control")) {
            if (!item["control"].is_number_integer()) throw UsageError("control must be an integer");
            g.control = item["control"].get<int>();
        }
        if (g.controlled() && !g.control) {
            throw UsageError("gate " + std::string(to_string(g.kind)) + " needs a control bit");
        }
        if (!g.controlled() && g.control) {
            throw UsageError("gate " + std::string(to_string(g.kind)) + " takes no control bit");
        }
        circ.gates.push_back(g);
    }
    return circ;
}

inline std::string write_circuit(const Circuit& circ) {
    json j = json::array();
    for (const Gate& g : circ.gates) {
        json item = {{"kind", std::string(to_string(g.kind))}, {"target", g.target}};
        if (g.control) item["control"] = *g.control;
        j.push_back(std::move(item));
    }
    return j.dump(2) + "\n";
}

}  // namespace geotele::io
