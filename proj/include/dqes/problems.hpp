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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dqes/error.hpp"
#include "dqes/pauli.hpp"
#include "dqes/random.hpp"
#include "dqes/state.hpp"

namespace dqes {

// Reduced two-qubit molecular Hamiltonians (STO-3G, parity mapping, two
// qubits tapered), in Hartree.
inline Observable molecule_fixture(std::string_view name) {
    if (name == "H2_075") {
        return Observable::from_pairs({{-1.05540303, "II"},
                                       {0.38874759, "IZ"},
                                       {-0.38874759, "ZI"},
                                       {-0.01117714, "ZZ"},
                                       {0.18177154, "XX"}});
    }
    if (name == "HeH+_100") {
        return Observable::from_pairs({{-3.04506092, "II"},
                                       {0.50258052, "IZ"},
                                       {0.11926278, "IX"},
                                       {-0.50258052, "ZI"},
                                       {0.11926278, "XI"},
                                       {-0.13894646, "ZZ"},
                                       {-0.11926145, "ZX"},
                                       {0.11926145, "XZ"},
                                       {0.11714671, "XX"}});
    }
    throw ConfigError("unknown molecule fixture '" + std::string(name) +
                      "' (built in: H2_075, HeH+_100); load other Hamiltonians from an observable file");
}

/// Open-chain transverse-field Ising model: c_zz sum Z_i Z_{i+1} + c_x sum X_i.
inline Observable transverse_field_ising(int n, double c_zz, double c_x) {
    if (n < 2) throw ConfigError("transverse-field Ising chain needs n >= 2");
    check_qubit_count(n);
    std::vector<PauliTerm> terms;
    for (int i = 0; i < n - 1; ++i) {
        std::string s(static_cast<std::size_t>(n), 'I');
        s[i] = s[i + 1] = 'Z';
        terms.push_back({c_zz, PauliString(s)});
    }
    if (c_x != 0.0) {
        for (int i = 0; i < n; ++i) {
            std::string s(static_cast<std::size_t>(n), 'I');
            s[i] = 'X';
            terms.push_back({c_x, PauliString(s)});
        }
    }
    return Observable(n, std::move(terms));
}

/// sigma_x + sigma_y on one qubit.
inline Observable single_qubit_xy() { return Observable::from_pairs({{1.0, "X"}, {1.0, "Y"}}); }

/// Names accepted by `named_fixture`.
inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"H2_075", "HeH+_100", "ising_fig7", "ising_fig8", "xy1"};
    return names;
}

inline Observable named_fixture(std::string_view name) {
    if (name == "ising_fig7") return transverse_field_ising(3, 0.04645122, 0.27498273);
    if (name == "ising_fig8") return transverse_field_ising(3, 0.61436456, 0.32435029);
    if (name == "xy1") return single_qubit_xy();
    return molecule_fixture(name);
}

/// Undirected, unweighted simple graph with 0-based node labels.
struct GraphSpec {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<std::uint64_t> seed;
    std::optional<double> edge_probability;

    friend bool operator==(const GraphSpec& a, const GraphSpec& b) {
        return a.node_count == b.node_count && a.edges == b.edges;
    }
};

inline void validate_graph(const GraphSpec& g) {
    if (g.node_count < 1) throw ConfigError("graph needs at least one node");
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u == v) throw ConfigError("self-loop at node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= g.node_count || v >= g.node_count) {
            throw ConfigError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        }
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ConfigError("duplicate edge");
}

/// Number of edges whose endpoints differ in `assignment` (character i is node i).
inline int cut_value(const GraphSpec& g, std::string_view assignment) {
    if (assignment.size() != static_cast<std::size_t>(g.node_count)) {
        throw DimensionError("assignment has " + std::to_string(assignment.size()) + " bits, graph has " +
                             std::to_string(g.node_count) + " nodes");
    }
    int cut = 0;
    for (auto [u, v] : g.edges) cut += assignment[u] != assignment[v];
    return cut;
}

/// Assignment string for computational basis index x; node i is qubit i+1.
inline std::string assignment_from_index(std::size_t x, int node_count) {
    std::string s(static_cast<std::size_t>(node_count), '0');
    for (int i = 0; i < node_count; ++i)
        if ((x >> (node_count - 1 - i)) & 1u) s[i] = '1';
    return s;
}

/// sum over edges of Z_u Z_v. On |x>, <H> = |E| - 2 cut(x).
inline Observable maxcut_hamiltonian(const GraphSpec& g) {
    validate_graph(g);
    if (g.node_count > kMaxQubits) {
        throw ConfigError("Max-Cut graph with " + std::to_string(g.node_count) + " nodes exceeds " +
                          std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<PauliTerm> terms;
    for (auto [u, v] : g.edges) {
        std::string s(static_cast<std::size_t>(g.node_count), 'I');
        s[u] = s[v] = 'Z';
        terms.push_back({1.0, PauliString(s)});
    }
    if (terms.empty()) terms.push_back({0.0, PauliString::identity(g.node_count)});
    return Observable(g.node_count, std::move(terms));
}

/// G(n, p): pairs (u, v), u < v, visited in lexicographic order, each kept
/// when a uniform draw falls below p.
inline GraphSpec random_graph(int node_count, double edge_probability, std::uint64_t seed) {
    if (node_count < 2) throw ConfigError("random graph needs at least 2 nodes");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
        throw ConfigError("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    GraphSpec g;
    g.node_count = node_count;
    g.seed = seed;
    g.edge_probability = edge_probability;
    for (int u = 0; u < node_count; ++u)
        for (int v = u + 1; v < node_count; ++v)
            if (rng.uniform() < edge_probability) g.edges.emplace_back(u, v);
    return g;
}

/// Graph text format: `nodes <N>` then one `u v` per line. Lines starting with
/// '#' are comments and carry generator metadata.
inline std::string encode_graph(const GraphSpec& g, std::string_view version = {}) {
    std::ostringstream out;
    if (!version.empty()) out << "# dqes " << version << "\n";
    if (g.seed) out << "# seed " << *g.seed << "\n";
    if (g.edge_probability) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", *g.edge_probability);
        out << "# edge-prob " << buf << "\n";
    }
    out << "nodes " << g.node_count << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

inline GraphSpec decode_graph(std::string_view text) {
    GraphSpec g;
    bool have_header = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::istringstream fields(line.substr(first));
        if (line[first] == '#') {
            std::string hash, key;
            fields >> hash >> key;
            if (key == "seed") {
                std::uint64_t s;
                if (fields >> s) g.seed = s;
            } else if (key == "edge-prob") {
                double p;
                if (fields >> p) g.edge_probability = p;
            }
            continue;
        }
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "nodes") throw FormatError("expected 'nodes <N>'", line_no);
            try {
                g.node_count = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                throw FormatError("node count is not an integer", line_no);
            }
            have_header = true;
            continue;
        }
        if (tokens.size() == 3) throw FormatError("weighted edges are not supported", line_no);
        if (tokens.size() != 2) throw FormatError("expected 'u v'", line_no);
        try {
            std::size_t used0 = 0, used1 = 0;
            int u = std::stoi(tokens[0], &used0), v = std::stoi(tokens[1], &used1);
            if (used0 != tokens[0].size() || used1 != tokens[1].size()) throw std::invalid_argument("trailing");
            g.edges.emplace_back(std::min(u, v), std::max(u, v));
        } catch (const std::exception&) {
            throw FormatError("edge endpoints must be integers", line_no);
        }
    }
    if (!have_header) throw FormatError("missing 'nodes <N>' line", line_no + 1);
    try {
        validate_graph(g);
    } catch (const ConfigError& e) {
        throw FormatError(e.what(), line_no);
    }
    return g;
}

/// Dense 2^n x 2^n matrix of `obs`.
inline Eigen::MatrixXcd observable_matrix(const Observable& obs) {
    const std::size_t d = std::size_t{1} << obs.qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (const auto& t : obs.terms()) {
        const std::size_t xm = t.pauli.x_mask(), zm = t.pauli.z_mask();
        const Complex phase = t.coeff * i_power(t.pauli.y_count());
        for (std::size_t b = 0; b < d; ++b) {
            Complex v = (std::popcount(b & zm) & 1) ? -phase : phase;
            m(static_cast<Eigen::Index>(b ^ xm), static_cast<Eigen::Index>(b)) += v;
        }
    }
    return m;
}

inline constexpr int kMaxSpectrumQubits = 10;

struct ExactSpectrumResult {
    double ground_energy;
    StateVector ground_state;
    std::vector<double> eigenvalues;  // ascending
};

/// Dense Hermitian eigendecomposition; the ground eigenvector is normalized.
inline ExactSpectrumResult exact_spectrum(const Observable& obs) {
    if (obs.qubits() > kMaxSpectrumQubits) {
        throw ConfigError("exact spectrum is limited to n <= " + std::to_string(kMaxSpectrumQubits) + " qubits");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(observable_matrix(obs));
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
    const auto& values = solver.eigenvalues();
    std::vector<double> eig(values.data(), values.data() + values.size());
    Eigen::VectorXcd v = solver.eigenvectors().col(0);
    std::vector<Complex> amps(v.data(), v.data() + v.size());
    return {eig.front(), StateVector::normalized(obs.qubits(), std::move(amps)), std::move(eig)};
}

}  // namespace dqes
