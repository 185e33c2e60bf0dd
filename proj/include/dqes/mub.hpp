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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dqes/ansatz.hpp"
#include "dqes/error.hpp"
#include "dqes/pauli.hpp"
#include "dqes/state.hpp"

namespace dqes {

inline constexpr int kMaxMubQubits = 3;

/// A set of orthonormal bases of C^(2^n). Built sets hold all 2^n + 1 bases;
/// arbitrary (possibly invalid) sets can be assembled by hand for certification.
struct MubSet {
    int n = 0;
    std::vector<std::vector<StateVector>> bases;
    /// For built sets: the 2^n - 1 commuting Pauli strings stabilizing each basis.
    std::vector<std::vector<PauliString>> stabilizer_classes;

    std::size_t dim() const { return std::size_t{1} << n; }
    std::size_t state_count() const {
        std::size_t c = 0;
        for (const auto& b : bases) c += b.size();
        return c;
    }
};

namespace detail {

// Binary n x n matrices are stored as one bitmask per row; bit c of row r is
// entry (r, c) with index 0 for qubit 1.
using BitMatrix = std::vector<std::uint32_t>;

inline int bit(std::uint32_t v, int k) { return static_cast<int>((v >> k) & 1u); }

inline bool invertible_gf2(BitMatrix m, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (bit(m[r], col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < n; ++r)
            if (r != col && bit(m[r], col)) m[r] ^= m[col];
    }
    return true;
}

inline BitMatrix symmetric_from_code(std::uint32_t code, int n) {
    BitMatrix m(n, 0);
    int b = 0;
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c, ++b)
            if ((code >> b) & 1u) {
                m[r] |= 1u << c;
                m[c] |= 1u << r;
            }
    return m;
}

inline BitMatrix difference(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] ^ b[i];
    return d;
}

inline bool extend_family(const std::vector<BitMatrix>& candidates, std::size_t start, std::size_t target, int n,
                          std::vector<BitMatrix>& chosen) {
    if (chosen.size() == target) return true;
    for (std::size_t i = start; i < candidates.size(); ++i) {
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const BitMatrix& c) {
            return invertible_gf2(difference(c, candidates[i]), n);
        });
        if (!ok) continue;
        chosen.push_back(candidates[i]);
        if (extend_family(candidates, i + 1, target, n, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

// 2^n symmetric binary matrices, starting with zero, whose pairwise
// differences are all nonsingular. Together with the Z-type class these give
// a partition of the non-identity Paulis into 2^n + 1 commuting classes
// {X^a Z^(M a) : a != 0}. Deterministic first-found depth-first search.
inline std::vector<BitMatrix> symmetric_family(int n) {
    const std::uint32_t codes = 1u << (n * (n + 1) / 2);
    std::vector<BitMatrix> candidates;
    for (std::uint32_t code = 0; code < codes; ++code) candidates.push_back(symmetric_from_code(code, n));
    std::vector<BitMatrix> chosen{candidates.front()};
    if (!extend_family(candidates, 1, std::size_t{1} << n, n, chosen)) {
        throw std::logic_error("no symmetric MUB family found");
    }
    return chosen;
}

// Qubit-ordered bit k of basis index x (k = 0 is qubit 1, the MSB).
inline int qubit_bit(std::size_t x, int n, int k) { return static_cast<int>((x >> (n - 1 - k)) & 1u); }

inline PauliString pauli_from_symplectic(std::uint32_t xs, std::uint32_t zs, int n) {
    std::string letters(static_cast<std::size_t>(n), 'I');
    for (int k = 0; k < n; ++k) {
        int a = bit(xs, k), b = bit(zs, k);
        letters[k] = a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
    }
    return PauliString(letters);
}

inline std::uint32_t mat_vec(const BitMatrix& m, std::uint32_t v, int n) {
    std::uint32_t out = 0;
    for (int r = 0; r < n; ++r)
        if (std::popcount(m[r] & v) & 1) out |= 1u << r;
    return out;
}

inline std::vector<PauliString> pauli_class(const BitMatrix* m, int n) {
    std::vector<PauliString> out;
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
        out.push_back(m ? pauli_from_symplectic(a, mat_vec(*m, a, n), n) : pauli_from_symplectic(0, a, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Basis of the class {X^a Z^(M a)}: state j has amplitudes
// i^(x^T M x mod 4) (-1)^(j.x) / sqrt(d), the image of |j> under D_M H^(x)n.
inline std::vector<StateVector> quadratic_phase_basis(const BitMatrix& m, int n) {
    const std::size_t d = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<int> q(d);
    for (std::size_t x = 0; x < d; ++x) {
        int acc = 0;
        for (int r = 0; r < n; ++r) {
            if (!qubit_bit(x, n, r)) continue;
            acc += bit(m[r], r);
            for (int c = r + 1; c < n; ++c) acc += 2 * bit(m[r], c) * qubit_bit(x, n, c);
        }
        q[x] = acc % 4;
    }
    std::vector<StateVector> basis;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Complex> amps(d);
        for (std::size_t x = 0; x < d; ++x) {
            double sign = (std::popcount(j & x) & 1) ? -1.0 : 1.0;
            amps[x] = sign * scale * i_power(q[x]);
        }
        basis.push_back(make_unchecked_state(n, std::move(amps)));
    }
    return basis;
}

}  // namespace detail

/// Full set of 2^n + 1 mutually unbiased bases for n in {1, 2, 3}.
/// Basis 0 is computational, basis 1 is the transversal-Hadamard basis, and the
/// rest are ordered by the smallest Pauli string of their stabilizer class.
/// State j of every basis is the image of |j>; the first amplitude is real positive.
inline MubSet build_full_mub_set(int n) {
    if (n < 1 || n > kMaxMubQubits) {
        throw ConfigError("full MUB sets are built for 1 <= n <= 3, got n = " + std::to_string(n));
    }
    const std::size_t d = std::size_t{1} << n;
    MubSet set;
    set.n = n;

    std::vector<StateVector> computational;
    for (std::size_t j = 0; j < d; ++j) computational.push_back(StateVector::basis(n, j));
    set.bases.push_back(std::move(computational));
    set.stabilizer_classes.push_back(detail::pauli_class(nullptr, n));

    auto family = detail::symmetric_family(n);
    set.bases.push_back(detail::quadratic_phase_basis(family.front(), n));
    set.stabilizer_classes.push_back(detail::pauli_class(&family.front(), n));

    struct Entry {
        std::vector<PauliString> cls;
        std::vector<StateVector> basis;
    };
    std::vector<Entry> rest;
    for (std::size_t i = 1; i < family.size(); ++i) {
        rest.push_back({detail::pauli_class(&family[i], n), detail::quadratic_phase_basis(family[i], n)});
    }
    std::sort(rest.begin(), rest.end(), [](const Entry& a, const Entry& b) { return a.cls.front() < b.cls.front(); });
    for (auto& e : rest) {
        set.stabilizer_classes.push_back(std::move(e.cls));
        set.bases.push_back(std::move(e.basis));
    }
    return set;
}

struct MubReport {
    std::size_t basis_count = 0;
    std::size_t state_count = 0;
    double max_orthonormality_deviation = 0.0;
    double max_unbiasedness_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Checks orthonormality within each basis and |<a|b>| = 1/sqrt(d) across bases.
inline MubReport verify_mub_set(const MubSet& set, double tol) {
    if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
    MubReport report;
    report.tolerance = tol;
    report.basis_count = set.bases.size();
    report.state_count = set.state_count();
    const double target = 1.0 / std::sqrt(static_cast<double>(set.dim()));
    for (std::size_t b1 = 0; b1 < set.bases.size(); ++b1) {
        for (std::size_t b2 = b1; b2 < set.bases.size(); ++b2) {
            const auto& A = set.bases[b1];
            const auto& B = set.bases[b2];
            for (std::size_t i = 0; i < A.size(); ++i) {
                for (std::size_t j = (b1 == b2 ? i : 0); j < B.size(); ++j) {
                    Complex ip = inner_product(A[i], B[j]);
                    if (b1 == b2) {
                        double dev = std::abs(ip - (i == j ? 1.0 : 0.0));
                        report.max_orthonormality_deviation = std::max(report.max_orthonormality_deviation, dev);
                    } else {
                        double dev = std::abs(std::abs(ip) - target);
                        report.max_unbiasedness_deviation = std::max(report.max_unbiasedness_deviation, dev);
                    }
                }
            }
        }
    }
    report.passed = report.max_orthonormality_deviation < tol && report.max_unbiasedness_deviation < tol;
    return report;
}

/// One partial-DQES sample point: a K-qubit MUB state placed on `subset`
/// (1-based, increasing) with |0> on every other qubit.
struct PartialMubSpec {
    int n = 0;
    int k = 0;
    std::vector<int> subset;
    int basis_index = 0;
    int state_index = 0;

    std::string subset_label() const {
        std::string s;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(subset[i]);
        }
        return s;
    }

    std::string label() const {
        return "b" + std::to_string(basis_index) + ".s" + std::to_string(state_index) + "@[" + subset_label() + "]";
    }

    friend bool operator==(const PartialMubSpec&, const PartialMubSpec&) = default;
};

inline void check_partial_constant(int n, int k) {
    check_qubit_count(n);
    if (k < 1) throw ConfigError("partial MUB constant K must be at least 1");
    if (k > kMaxMubQubits) throw ConfigError("partial MUB constant K = " + std::to_string(k) + " exceeds 3");
    if (k > n) {
        throw ConfigError("partial MUB constant K = " + std::to_string(k) + " exceeds qubit count " +
                          std::to_string(n));
    }
}

/// C(n, K) * (2^K + 1) * 2^K.
inline std::size_t partial_spec_count(int n, int k) {
    std::size_t c = 1;
    for (int i = 0; i < k; ++i) c = c * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    std::size_t d = std::size_t{1} << k;
    return c * (d + 1) * d;
}

/// K-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> qubit_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// All partial specs ordered by subset, then basis index, then state index.
inline std::vector<PartialMubSpec> enumerate_partial_specs(int n, int k) {
    check_partial_constant(n, k);
    const int d = 1 << k;
    std::vector<PartialMubSpec> specs;
    specs.reserve(partial_spec_count(n, k));
    for (const auto& subset : qubit_subsets(n, k))
        for (int b = 0; b <= d; ++b)
            for (int s = 0; s < d; ++s) specs.push_back({n, k, subset, b, s});
    return specs;
}

inline void validate_spec(const PartialMubSpec& spec) {
    check_partial_constant(spec.n, spec.k);
    if (spec.subset.size() != static_cast<std::size_t>(spec.k)) throw ConfigError("subset size differs from K");
    for (std::size_t i = 0; i < spec.subset.size(); ++i) {
        if (spec.subset[i] < 1 || spec.subset[i] > spec.n) throw ConfigError("subset qubit index out of range");
        if (i > 0 && spec.subset[i] <= spec.subset[i - 1]) throw ConfigError("subset must be strictly increasing");
    }
    const int d = 1 << spec.k;
    if (spec.basis_index < 0 || spec.basis_index > d) throw ConfigError("basis index out of range");
    if (spec.state_index < 0 || spec.state_index >= d) throw ConfigError("state index out of range");
}

/// The n-qubit state of `spec`: MUB state on the subset qubits, |0> elsewhere.
inline StateVector realize_partial_state(const PartialMubSpec& spec, const MubSet& set) {
    validate_spec(spec);
    if (set.n != spec.k) {
        throw DimensionError("spec has K = " + std::to_string(spec.k) + " but MUB set has n = " +
                             std::to_string(set.n));
    }
    const auto& local = set.bases.at(static_cast<std::size_t>(spec.basis_index))
                            .at(static_cast<std::size_t>(spec.state_index));
    std::vector<Complex> amps(std::size_t{1} << spec.n);
    for (std::size_t y = 0; y < local.dim(); ++y) {
        std::size_t global = 0;
        for (int m = 0; m < spec.k; ++m)
            if ((y >> (spec.k - 1 - m)) & 1u) global |= qubit_mask(spec.n, spec.subset[m]);
        amps[global] = local[y];
    }
    return make_unchecked_state(spec.n, std::move(amps));
}

/// U(theta0)|state>: a shifted MUB state.
inline StateVector shift_state(const StateVector& state, const AnsatzSpec& ansatz, std::span<const double> theta0) {
    return prepare_state(ansatz, theta0, state);
}

inline MubSet shift_mub_set(const MubSet& set, const AnsatzSpec& ansatz, std::span<const double> theta0) {
    MubSet out;
    out.n = set.n;
    for (const auto& basis : set.bases) {
        std::vector<StateVector> shifted;
        for (const auto& s : basis) shifted.push_back(shift_state(s, ansatz, theta0));
        out.bases.push_back(std::move(shifted));
    }
    return out;
}

}  // namespace dqes
