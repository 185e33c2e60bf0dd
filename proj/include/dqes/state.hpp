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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dqes/error.hpp"

namespace dqes {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 12;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kUnitarityTolerance = 1e-10;

inline void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw ConfigError("qubit count " + std::to_string(n) + " outside 1 <= n <= " +
                          std::to_string(kMaxQubits));
    }
}

/// Bit position of 1-based qubit `q` inside a basis index: qubit 1 is the most
/// significant bit, so the ket |b1 b2 ... bn> has index b1*2^(n-1) + ... + bn.
inline constexpr std::size_t qubit_mask(int n, int q) { return std::size_t{1} << (n - q); }

/// Dense pure state on n qubits. Amplitudes are normalized on construction.
class StateVector {
   public:
    StateVector(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
        check_qubit_count(n);
        if (amps_.size() != (std::size_t{1} << n)) {
            throw DimensionError("state of " + std::to_string(n) + " qubits needs " +
                                 std::to_string(std::size_t{1} << n) + " amplitudes, got " +
                                 std::to_string(amps_.size()));
        }
        double nrm = norm();
        if (std::abs(nrm - 1.0) > kNormTolerance) {
            throw ConfigError("state norm " + std::to_string(nrm) + " differs from 1");
        }
    }

    /// Scales `amps` to unit norm. Throws on the zero vector.
    static StateVector normalized(int n, std::vector<Complex> amps) {
        double s = 0.0;
        for (const auto& a : amps) s += std::norm(a);
        if (!(s > 0.0)) throw ConfigError("cannot normalize a zero vector");
        double inv = 1.0 / std::sqrt(s);
        for (auto& a : amps) a *= inv;
        return StateVector(n, std::move(amps));
    }

    /// Computational basis state |index>.
    static StateVector basis(int n, std::size_t index) {
        check_qubit_count(n);
        std::size_t dim = std::size_t{1} << n;
        if (index >= dim) throw ConfigError("basis index out of range");
        std::vector<Complex> amps(dim);
        amps[index] = 1.0;
        return StateVector(n, std::move(amps));
    }

    /// Parses a ket label such as "01" (qubit 1 leftmost).
    static StateVector from_bits(std::string_view bits) {
        std::size_t index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') throw ConfigError("bit label must contain only 0/1");
            index = (index << 1) | static_cast<std::size_t>(c - '0');
        }
        return basis(static_cast<int>(bits.size()), index);
    }

    int qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

   private:
    struct Unchecked {};
    StateVector(Unchecked, int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}

    friend StateVector make_unchecked_state(int n, std::vector<Complex> amps);

    int n_;
    std::vector<Complex> amps_;
};

/// Internal constructor for results of unitary operations on valid states.
inline StateVector make_unchecked_state(int n, std::vector<Complex> amps) {
    return StateVector(StateVector::Unchecked{}, n, std::move(amps));
}

inline StateVector zero_state(int n) { return StateVector::basis(n, 0); }

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

struct SingleQubitGate {
    Matrix2 u;
    int target;  // 1-based
};

struct CnotGate {
    int control;  // 1-based
    int target;   // 1-based
};

using Gate = std::variant<SingleQubitGate, CnotGate>;

inline Matrix2 adjoint(const Matrix2& m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

inline bool is_unitary(const Matrix2& m, double tol = kUnitarityTolerance) {
    // (U^dagger U)_{ij} = sum_k conj(U_ki) U_kj
    Complex a = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
    Complex b = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    Complex d = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
    return std::abs(a - 1.0) <= tol && std::abs(b) <= tol && std::abs(d - 1.0) <= tol;
}

namespace gates {

inline Gate unitary(int target, const Matrix2& m) { return SingleQubitGate{m, target}; }

inline Gate hadamard(int q) {
    const double s = 1.0 / std::sqrt(2.0);
    return SingleQubitGate{{s, s, s, -s}, q};
}
inline Gate x(int q) { return SingleQubitGate{{0.0, 1.0, 1.0, 0.0}, q}; }
inline Gate y(int q) { return SingleQubitGate{{0.0, Complex(0, -1), Complex(0, 1), 0.0}, q}; }
inline Gate z(int q) { return SingleQubitGate{{1.0, 0.0, 0.0, -1.0}, q}; }
inline Gate s_dagger(int q) { return SingleQubitGate{{1.0, 0.0, 0.0, Complex(0, -1)}, q}; }

/// exp(-i theta Y / 2)
inline Gate ry(int q, double theta) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return SingleQubitGate{{c, -s, s, c}, q};
}

/// exp(-i theta Z / 2)
inline Gate rz(int q, double theta) {
    return SingleQubitGate{{std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)}, q};
}

inline Gate cnot(int control, int target) { return CnotGate{control, target}; }

}  // namespace gates

inline Gate inverse(const Gate& g) {
    if (const auto* s = std::get_if<SingleQubitGate>(&g)) return SingleQubitGate{adjoint(s->u), s->target};
    return g;
}

inline void validate_gate(const Gate& gate, int n) {
    auto check_index = [n](int q) {
        if (q < 1 || q > n) {
            throw DimensionError("gate qubit index " + std::to_string(q) + " outside 1.." +
                                 std::to_string(n));
        }
    };
    if (const auto* s = std::get_if<SingleQubitGate>(&gate)) {
        check_index(s->target);
        if (!is_unitary(s->u)) throw ConfigError("single-qubit gate matrix is not unitary");
    } else {
        const auto& c = std::get<CnotGate>(gate);
        check_index(c.control);
        check_index(c.target);
        if (c.control == c.target) throw ConfigError("CNOT control equals target");
    }
}

/// Applies `gate` to an exclusively owned amplitude buffer. No validation.
inline void apply_gate_inplace(std::span<Complex> amps, int n, const Gate& gate) {
    const std::size_t dim = amps.size();
    if (const auto* s = std::get_if<SingleQubitGate>(&gate)) {
        const std::size_t mask = qubit_mask(n, s->target);
        const auto& u = s->u;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & mask) continue;
            Complex a0 = amps[i], a1 = amps[i | mask];
            amps[i] = u[0] * a0 + u[1] * a1;
            amps[i | mask] = u[2] * a0 + u[3] * a1;
        }
    } else {
        const auto& c = std::get<CnotGate>(gate);
        const std::size_t cm = qubit_mask(n, c.control), tm = qubit_mask(n, c.target);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cm) && !(i & tm)) std::swap(amps[i], amps[i | tm]);
        }
    }
}

inline StateVector apply_gate(const StateVector& state, const Gate& gate) {
    validate_gate(gate, state.qubits());
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    apply_gate_inplace(amps, state.qubits(), gate);
    return make_unchecked_state(state.qubits(), std::move(amps));
}

inline StateVector apply_circuit(const StateVector& state, std::span<const Gate> circuit) {
    for (const auto& g : circuit) validate_gate(g, state.qubits());
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (const auto& g : circuit) apply_gate_inplace(amps, state.qubits(), g);
    return make_unchecked_state(state.qubits(), std::move(amps));
}

/// <a|b>, conjugate-linear in `a`.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.qubits() != b.qubits()) {
        throw DimensionError("inner product of " + std::to_string(a.qubits()) + "- and " +
                             std::to_string(b.qubits()) + "-qubit states");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

/// |<a|b>|^2, i.e. equality up to global phase when close to 1.
inline double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

/// a (x) b with a's qubits first (most significant).
inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
    int n = a.qubits() + b.qubits();
    if (n > kMaxQubits) {
        throw ConfigError("tensor product of " + std::to_string(n) + " qubits exceeds n <= " +
                          std::to_string(kMaxQubits));
    }
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
    return make_unchecked_state(n, std::move(amps));
}

struct BlochVector {
    double x, y, z;
};

inline BlochVector bloch_coordinates(const StateVector& s) {
    if (s.qubits() != 1) throw DimensionError("Bloch coordinates need a 1-qubit state");
    Complex a = s[0], b = s[1];
    Complex ab = std::conj(a) * b;
    return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

}  // namespace dqes
