// Copyright 2026 The DQES Workbench Authors
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

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dqes/error.hpp"
#include "dqes/pauli.hpp"

namespace dqes {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson observable_to_json(const Observable& obs) {
    OrderedJson doc;
    doc["n"] = obs.qubits();
    doc["terms"] = OrderedJson::array();
    for (const auto& t : obs.terms()) {
        OrderedJson term;
        term["coeff"] = t.coeff;
        term["pauli"] = t.pauli.letters();
        doc["terms"].push_back(std::move(term));
    }
    return doc;
}

/// Serializes to the observable document format: {"n": .., "terms": [{"coeff", "pauli"}]}.
inline std::string encode_observable(const Observable& obs) { return observable_to_json(obs).dump(2) + "\n"; }

inline Observable observable_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw FormatError("observable document must be an object", 1);
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw FormatError("missing integer field 'n'", 1);
    if (!doc.contains("terms") || !doc["terms"].is_array()) throw FormatError("missing array field 'terms'", 1);
    int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxQubits) throw FormatError("n = " + std::to_string(n) + " outside 1..12", 1);
    std::vector<PauliTerm> terms;
    std::size_t position = 0;
    for (const auto& item : doc["terms"]) {
        ++position;
        if (!item.is_object()) throw FormatError("term " + std::to_string(position) + " is not an object", position);
        if (!item.contains("coeff") || !item["coeff"].is_number()) {
            throw FormatError("term " + std::to_string(position) + ": non-numeric coefficient", position);
        }
        if (!item.contains("pauli") || !item["pauli"].is_string()) {
            throw FormatError("term " + std::to_string(position) + ": missing Pauli string", position);
        }
        auto letters = item["pauli"].get<std::string>();
        if (letters.size() != static_cast<std::size_t>(n)) {
            throw FormatError("term " + std::to_string(position) + ": Pauli string '" + letters + "' has length " +
                                  std::to_string(letters.size()) + ", expected " + std::to_string(n),
                              position);
        }
        try {
            terms.push_back({item["coeff"].get<double>(), PauliString(letters)});
        } catch (const FormatError& e) {
            throw FormatError("term " + std::to_string(position) + ", letter " + std::to_string(e.position) +
                                  ": bad Pauli letter in '" + letters + "'",
                              position);
        }
    }
    if (terms.empty()) throw FormatError("observable has no terms", 1);
    return Observable(n, std::move(terms));
}

/// Parses the observable document format. Syntax errors report the line number.
inline Observable decode_observable(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw FormatError(std::string("invalid JSON: ") + e.what(), line);
    }
    return observable_from_json(doc);
}

/// 64-bit FNV-1a, hex encoded.
inline std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Hash of the canonical form, so term order and duplicates do not matter.
inline std::string observable_hash(const Observable& obs) { return content_hash(encode_observable(obs.canonical())); }

}  // namespace dqes
