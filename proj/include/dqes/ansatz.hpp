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

#include <span>
#include <string>
#include <vector>

#include "dqes/error.hpp"
#include "dqes/state.hpp"

namespace dqes {

enum class RotationAxes { Y, YZ };

inline std::string to_string(RotationAxes axes) { return axes == RotationAxes::Y ? "Y" : "YZ"; }

inline RotationAxes parse_axes(std::string_view s) {
    if (s == "Y" || s == "y") return RotationAxes::Y;
    if (s == "YZ" || s == "yz") return RotationAxes::YZ;
    throw ConfigError("rotation axes must be Y or YZ, got '" + std::string(s) + "'");
}

using ParameterVector = std::vector<double>;

// Hardware-efficient ansatz: a leading rotation layer followed by `layers`
// entangled rotation layers E R E^-1, where E is the CNOT chain q -> q+1.
// Wrapping each later layer in E ... E^-1 makes U(0) the identity, so a
// zero parameter vector leaves the initial state untouched. Parameters are
// ordered by rotation layer, then qubit, then axis (Y before Z).
struct AnsatzSpec {
    int n;
    int layers;
    RotationAxes axes;

    int axes_per_qubit() const { return axes == RotationAxes::Y ? 1 : 2; }
    std::size_t parameter_count() const {
        return static_cast<std::size_t>(n) * axes_per_qubit() * static_cast<std::size_t>(layers + 1);
    }
};

inline AnsatzSpec build_ansatz(int n, int layers, RotationAxes axes) {
    check_qubit_count(n);
    if (layers < 1) throw ConfigError("ansatz needs at least one layer");
    return {n, layers, axes};
}

/// Overload for callers holding a letter set such as "Y" or "YZ".
inline AnsatzSpec build_ansatz(int n, int layers, std::string_view axes) {
    if (axes.empty()) throw ConfigError("rotation axes must not be empty");
    return build_ansatz(n, layers, parse_axes(axes));
}

inline void check_parameters(const AnsatzSpec& ansatz, std::span<const double> params) {
    if (params.size() != ansatz.parameter_count()) {
        throw DimensionError("ansatz takes " + std::to_string(ansatz.parameter_count()) + " parameters, got " +
                             std::to_string(params.size()));
    }
}

inline std::vector<Gate> ansatz_circuit(const AnsatzSpec& ansatz, std::span<const double> params) {
    check_parameters(ansatz, params);
    std::vector<Gate> circuit;
    std::size_t p = 0;
    for (int layer = 0; layer <= ansatz.layers; ++layer) {
        if (layer > 0)
            for (int q = 1; q < ansatz.n; ++q) circuit.push_back(gates::cnot(q, q + 1));
        for (int q = 1; q <= ansatz.n; ++q) {
            circuit.push_back(gates::ry(q, params[p++]));
            if (ansatz.axes == RotationAxes::YZ) circuit.push_back(gates::rz(q, params[p++]));
        }
        if (layer > 0)
            for (int q = ansatz.n - 1; q >= 1; --q) circuit.push_back(gates::cnot(q, q + 1));
    }
    return circuit;
}

/// U(theta)|initial>.
inline StateVector prepare_state(const AnsatzSpec& ansatz, std::span<const double> params,
                                 const StateVector& initial) {
    if (initial.qubits() != ansatz.n) {
        throw DimensionError("ansatz on " + std::to_string(ansatz.n) + " qubits applied to " +
                             std::to_string(initial.qubits()) + "-qubit state");
    }
    return apply_circuit(initial, ansatz_circuit(ansatz, params));
}

}  // namespace dqes
