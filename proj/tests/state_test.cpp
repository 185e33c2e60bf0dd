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

#include "dqes/state.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace dqes;

namespace {
const double kS = 1.0 / std::sqrt(2.0);

void expect_amps(const StateVector& s, std::vector<Complex> expected, double tol = 1e-12) {
    ASSERT_EQ(s.dim(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(std::abs(s[i] - expected[i]), 0.0, tol) << "index " << i;
}
}  // namespace

TEST(state, zero_state) {
    expect_amps(zero_state(1), {1, 0});
    expect_amps(zero_state(2), {1, 0, 0, 0});
    EXPECT_EQ(zero_state(12).dim(), 4096u);
    EXPECT_THROW(zero_state(13), ConfigError);
    EXPECT_THROW(zero_state(0), ConfigError);
    try {
        zero_state(13);
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
    }
}

TEST(state, constructor_checks) {
    EXPECT_THROW(StateVector(2, {1, 0, 0}), DimensionError);
    EXPECT_THROW(StateVector(1, {1, 1}), ConfigError);
    EXPECT_THROW(StateVector::normalized(1, {0, 0}), ConfigError);
    expect_amps(StateVector::normalized(1, {3, 4}), {0.6, 0.8});
    expect_amps(StateVector::from_bits("10"), {0, 0, 1, 0});
}

TEST(state, apply_gate_examples) {
    expect_amps(apply_gate(zero_state(1), gates::hadamard(1)), {kS, kS});
    expect_amps(apply_gate(StateVector::from_bits("10"), gates::cnot(1, 2)), {0, 0, 0, 1});
    expect_amps(apply_gate(zero_state(2), gates::x(2)), {0, 1, 0, 0});
    expect_amps(apply_gate(zero_state(1), gates::y(1)), {0, Complex(0, 1)});
}

TEST(state, apply_gate_errors) {
    EXPECT_THROW(apply_gate(zero_state(2), gates::x(3)), DimensionError);
    EXPECT_THROW(apply_gate(zero_state(2), gates::x(0)), DimensionError);
    EXPECT_THROW(apply_gate(zero_state(2), gates::unitary(1, {1, 1, 0, 1})), ConfigError);
    EXPECT_THROW(apply_gate(zero_state(2), gates::cnot(2, 2)), ConfigError);
}

TEST(state, rotation_gates) {
    auto one = apply_gate(zero_state(1), gates::ry(1, std::numbers::pi));
    EXPECT_NEAR(fidelity(one, StateVector::from_bits("1")), 1.0, 1e-15);
    auto same = apply_gate(zero_state(1), gates::rz(1, 0.7));
    EXPECT_NEAR(fidelity(same, zero_state(1)), 1.0, 1e-15);
    EXPECT_TRUE(is_unitary(std::get<SingleQubitGate>(gates::ry(1, 0.3)).u));
    EXPECT_TRUE(is_unitary(std::get<SingleQubitGate>(gates::s_dagger(1)).u));
}

TEST(state, inner_product_examples) {
    auto zero = zero_state(1);
    auto one = StateVector::from_bits("1");
    auto plus = apply_gate(zero, gates::hadamard(1));
    EXPECT_NEAR(std::abs(inner_product(zero, zero) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(zero, one)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(zero, plus)), 0.70710678, 1e-8);
    EXPECT_THROW(inner_product(zero, zero_state(2)), DimensionError);

    StateVector a(1, {kS, Complex(0, kS)});
    // conjugate-linear in the first argument: <a|0> = conj(a_0)
    EXPECT_NEAR(std::abs(inner_product(a, one) - Complex(0, -kS)), 0.0, 1e-15);
}

TEST(state, tensor_product_examples) {
    auto zero = zero_state(1);
    auto one = StateVector::from_bits("1");
    auto plus = apply_gate(zero, gates::hadamard(1));
    expect_amps(tensor_product(zero, one), {0, 1, 0, 0});
    expect_amps(tensor_product(plus, zero), {kS, 0, kS, 0});
    expect_amps(tensor_product(zero_state(2), zero), {1, 0, 0, 0, 0, 0, 0, 0});
    EXPECT_THROW(tensor_product(zero_state(6), zero_state(7)), ConfigError);
}

TEST(state, bloch_examples) {
    auto b0 = bloch_coordinates(zero_state(1));
    EXPECT_NEAR(b0.x, 0, 1e-15);
    EXPECT_NEAR(b0.y, 0, 1e-15);
    EXPECT_NEAR(b0.z, 1, 1e-15);
    auto minus = bloch_coordinates(StateVector(1, {kS, -kS}));
    EXPECT_NEAR(minus.x, -1, 1e-15);
    EXPECT_NEAR(minus.y, 0, 1e-15);
    EXPECT_NEAR(minus.z, 0, 1e-15);
    auto plus_i = bloch_coordinates(StateVector(1, {kS, Complex(0, kS)}));
    EXPECT_NEAR(plus_i.x, 0, 1e-15);
    EXPECT_NEAR(plus_i.y, 1, 1e-15);
    EXPECT_NEAR(plus_i.z, 0, 1e-15);
    EXPECT_THROW(bloch_coordinates(zero_state(2)), DimensionError);
}

TEST(state, bloch_vector_is_unit_for_pure_states) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = apply_circuit(zero_state(1), testutil::random_circuit(1, 5, rng));
        auto b = bloch_coordinates(s);
        EXPECT_NEAR(b.x * b.x + b.y * b.y + b.z * b.z, 1.0, 1e-10);
    }
}

TEST(state_properties, norm_preserved_by_random_circuits) {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.bits() % 6);
        auto circuit = testutil::random_circuit(n, 60, rng);
        auto s = zero_state(n);
        for (const auto& g : circuit) {
            s = apply_gate(s, g);
            ASSERT_LT(std::abs(s.norm() - 1.0), 1e-12);
        }
    }
}

TEST(state_properties, inverse_circuit_round_trip) {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.bits() % 5);
        auto circuit = testutil::random_circuit(n, 40, rng);
        auto start = apply_circuit(zero_state(n), testutil::random_circuit(n, 10, rng));
        auto s = apply_circuit(start, circuit);
        std::vector<Gate> inverse_circuit;
        for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) inverse_circuit.push_back(inverse(*it));
        s = apply_circuit(s, inverse_circuit);
        EXPECT_LT(testutil::max_abs_diff(s, start), 1e-10);
    }
}

TEST(state_properties, x_flips_index_bit) {
    for (int n = 1; n <= 5; ++n) {
        for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
            for (int k = 1; k <= n; ++k) {
                auto s = apply_gate(StateVector::basis(n, i), gates::x(k));
                std::size_t expected = i ^ (std::size_t{1} << (n - k));
                EXPECT_NEAR(std::abs(s[expected]), 1.0, 1e-15);
            }
        }
    }
}
