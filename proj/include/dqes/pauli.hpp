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
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dqes/error.hpp"
#include "dqes/random.hpp"
#include "dqes/state.hpp"

namespace dqes {

/// Tensor product of single-qubit Paulis; letters()[k] acts on qubit k+1.
class PauliString {
   public:
    explicit PauliString(std::string letters) : letters_(std::move(letters)) {
        check_qubit_count(qubits());
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            char c = letters_[k];
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw FormatError(std::string("bad Pauli letter '") + c + "'", k + 1);
            }
        }
    }

    static PauliString identity(int n) { return PauliString(std::string(static_cast<std::size_t>(n), 'I')); }

    int qubits() const { return static_cast<int>(letters_.size()); }
    const std::string& letters() const { return letters_; }
    bool is_identity() const { return letters_.find_first_not_of('I') == std::string::npos; }

    /// Basis indices flipped by the operator (X and Y letters).
    std::size_t x_mask() const { return mask_of("XY"); }
    /// Basis indices picking up a sign (Z and Y letters).
    std::size_t z_mask() const { return mask_of("ZY"); }
    int y_count() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'Y')); }

    friend auto operator<=>(const PauliString&, const PauliString&) = default;

   private:
    std::size_t mask_of(std::string_view set) const {
        std::size_t m = 0;
        int n = qubits();
        for (int k = 0; k < n; ++k)
            if (set.find(letters_[k]) != std::string_view::npos) m |= qubit_mask(n, k + 1);
        return m;
    }

    std::string letters_;
};

inline Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

struct PauliTerm {
    double coeff;
    PauliString pauli;
};

/// Real-weighted sum of Pauli strings on a fixed number of qubits.
class Observable {
   public:
    Observable(int n, std::vector<PauliTerm> terms) : n_(n), terms_(std::move(terms)) {
        check_qubit_count(n);
        for (std::size_t t = 0; t < terms_.size(); ++t) {
            if (terms_[t].pauli.qubits() != n) {
                throw FormatError("term has " + std::to_string(terms_[t].pauli.qubits()) +
                                      " letters, observable has " + std::to_string(n) + " qubits",
                                  t + 1);
            }
            if (!std::isfinite(terms_[t].coeff)) throw FormatError("non-finite coefficient", t + 1);
        }
    }

    /// Convenience: {{c, "XZ"}, ...}
    static Observable from_pairs(std::initializer_list<std::pair<double, std::string>> pairs) {
        std::vector<PauliTerm> terms;
        for (const auto& [c, s] : pairs) terms.push_back({c, PauliString(s)});
        if (terms.empty()) throw ConfigError("observable needs at least one term");
        int n = terms.front().pauli.qubits();
        return Observable(n, std::move(terms));
    }

    int qubits() const { return n_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    /// Merges duplicate strings and sorts terms by letter sequence.
    Observable canonical() const {
        std::map<std::string, double> merged;
        for (const auto& t : terms_) merged[t.pauli.letters()] += t.coeff;
        std::vector<PauliTerm> out;
        out.reserve(merged.size());
        for (const auto& [letters, c] : merged) out.push_back({c, PauliString(letters)});
        return Observable(n_, std::move(out));
    }

    Observable operator+(const Observable& other) const {
        if (other.n_ != n_) throw DimensionError("adding observables of different sizes");
        auto terms = terms_;
        terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
        return Observable(n_, std::move(terms));
    }

   private:
    int n_;
    std::vector<PauliTerm> terms_;
};

inline void check_same_size(int a, int b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b) +
                             " qubits");
    }
}

/// P|psi>; P|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>.
inline StateVector pauli_apply(const PauliString& p, const StateVector& state) {
    check_same_size(p.qubits(), state.qubits(), "pauli_apply");
    const std::size_t xm = p.x_mask(), zm = p.z_mask();
    const Complex phase = i_power(p.y_count());
    std::vector<Complex> out(state.dim());
    for (std::size_t b = 0; b < state.dim(); ++b) {
        Complex v = phase * state[b];
        if (std::popcount(b & zm) & 1) v = -v;
        out[b ^ xm] = v;
    }
    return make_unchecked_state(state.qubits(), std::move(out));
}

/// <psi|P|psi> without materializing P|psi>.
inline Complex pauli_expectation(const PauliString& p, const StateVector& state) {
    check_same_size(p.qubits(), state.qubits(), "pauli_expectation");
    const std::size_t xm = p.x_mask(), zm = p.z_mask();
    Complex acc = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        Complex v = std::conj(state[b ^ xm]) * state[b];
        acc += (std::popcount(b & zm) & 1) ? -v : v;
    }
    return i_power(p.y_count()) * acc;
}

inline constexpr double kHermiticityTolerance = 1e-10;

/// sum_i h_i <psi|P_i|psi>.
inline double expectation_exact(const Observable& obs, const StateVector& state) {
    check_same_size(obs.qubits(), state.qubits(), "expectation");
    Complex total = 0.0;
    for (const auto& t : obs.terms()) total += t.coeff * pauli_expectation(t.pauli, state);
    if (std::abs(total.imag()) > kHermiticityTolerance) {
        throw std::logic_error("expectation has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

struct SampledEstimate {
    double mean;
    double standard_error;
};

/// Rotates a copy of `state` so that measuring `p` reduces to a Z-parity:
/// H for X, S-dagger then H for Y, nothing for Z.
inline StateVector rotate_to_measurement_basis(const PauliString& p, const StateVector& state) {
    std::vector<Gate> circuit;
    for (int k = 0; k < p.qubits(); ++k) {
        char c = p.letters()[k];
        if (c == 'X') {
            circuit.push_back(gates::hadamard(k + 1));
        } else if (c == 'Y') {
            circuit.push_back(gates::s_dagger(k + 1));
            circuit.push_back(gates::hadamard(k + 1));
        }
    }
    return apply_circuit(state, circuit);
}

/// Shot-based estimate of <obs>: each term is measured in its own rotated copy
/// with `shots` samples drawn from a generator seeded once per call.
inline SampledEstimate expectation_sampled(const Observable& obs, const StateVector& state, std::int64_t shots,
                                           std::uint64_t seed) {
    if (shots < 1) throw ConfigError("shots must be positive");
    check_same_size(obs.qubits(), state.qubits(), "expectation_sampled");
    Rng rng(seed);
    double mean = 0.0, var = 0.0;
    for (const auto& t : obs.terms()) {
        if (t.pauli.is_identity()) {
            mean += t.coeff;
            continue;
        }
        StateVector rotated = rotate_to_measurement_basis(t.pauli, state);
        // Parity mask: every non-identity letter contributes its Z outcome.
        std::size_t parity_mask = t.pauli.x_mask() | t.pauli.z_mask();
        std::vector<double> cdf(rotated.dim());
        double run = 0.0;
        for (std::size_t b = 0; b < rotated.dim(); ++b) {
            run += std::norm(rotated[b]);
            cdf[b] = run;
        }
        std::int64_t plus = 0;
        for (std::int64_t s = 0; s < shots; ++s) {
            double u = rng.uniform() * run;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            std::size_t b = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
            if (!(std::popcount(b & parity_mask) & 1)) ++plus;
        }
        double m = (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) / static_cast<double>(shots);
        // Sample variance of a +-1 variable is 1 - m^2 (population form).
        double term_var = (1.0 - m * m) / static_cast<double>(shots);
        mean += t.coeff * m;
        var += t.coeff * t.coeff * std::max(term_var, 0.0);
    }
    return {mean, std::sqrt(var)};
}

}  // namespace dqes
