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

#include "dqes/landscape.hpp"

#include <cmath>
#include <map>

#include "gtest/gtest.h"

#include "dqes/problems.hpp"
#include "test_util.hpp"

using namespace dqes;

namespace {

double population_variance(const std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    return var / static_cast<double>(v.size());
}

}  // namespace

TEST(full_dqes, h2_minimum_is_computational) {
    auto report = run_full_dqes(molecule_fixture("H2_075"), build_full_mub_set(2), "H2_075");
    ASSERT_EQ(report.records.size(), 20u);
    EXPECT_TRUE(report.full());
    // Eigenvalue sums on the four computational states.
    const double diag[4] = {-1.05540303 + 0.38874759 - 0.38874759 - 0.01117714,
                            -1.05540303 - 0.38874759 - 0.38874759 + 0.01117714,
                            -1.05540303 + 0.38874759 + 0.38874759 + 0.01117714,
                            -1.05540303 - 0.38874759 + 0.38874759 - 0.01117714};
    const double comp_min = *std::min_element(diag, diag + 4);
    EXPECT_NEAR(comp_min, -1.82172107, 1e-8);
    auto best = rank_initial_states(report, 1).front();
    EXPECT_EQ(best.spec.basis_index, 0);
    EXPECT_EQ(best.spec.state_index, 1);
    EXPECT_NEAR(best.energy, comp_min, 1e-12);
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(report.records[j].energy, diag[j], 1e-12);
    auto stats = basis_statistics(report);
    ASSERT_EQ(stats.size(), 5u);
    EXPECT_NEAR(stats[0].min, comp_min, 1e-12);
}

TEST(full_dqes, constant_observable) {
    auto report = run_full_dqes(Observable::from_pairs({{0.75, "II"}}), build_full_mub_set(2));
    for (const auto& r : report.records) EXPECT_NEAR(r.energy, 0.75, 1e-12);
    for (const auto& s : basis_statistics(report)) {
        EXPECT_EQ(s.count, 4u);
        EXPECT_NEAR(s.variance, 0.0, 1e-24);
    }
}

TEST(full_dqes, single_qubit_xy) {
    auto report = run_full_dqes(single_qubit_xy(), build_full_mub_set(1));
    ASSERT_EQ(report.records.size(), 6u);
    const double expected[6] = {0, 0, 1, -1, 1, -1};  // |0>,|1>,|+>,|->,|+i>,|-i>
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(report.records[i].energy, expected[i], 1e-12) << i;
    auto top = rank_initial_states(report, 2);
    EXPECT_EQ(top[0].spec.label(), "b1.s1@[1]");
    EXPECT_EQ(top[1].spec.label(), "b2.s1@[1]");
}

TEST(full_dqes, errors) {
    EXPECT_THROW(run_full_dqes(molecule_fixture("H2_075"), build_full_mub_set(1)), DimensionError);
    Rng rng(1);
    EXPECT_THROW(run_full_dqes(testutil::random_observable(4, 3, rng), build_full_mub_set(3)), ConfigError);
}

TEST(partial_dqes, record_counts) {
    auto g = random_graph(8, 0.5, 42);
    auto report = run_partial_dqes(maxcut_hamiltonian(g), 3);
    EXPECT_EQ(report.records.size(), 4032u);
    EXPECT_FALSE(report.full());
    Rng rng(5);
    EXPECT_EQ(run_partial_dqes(testutil::random_observable(10, 6, rng), 2).records.size(), 900u);
    EXPECT_THROW(run_partial_dqes(testutil::random_observable(2, 2, rng), 3), ConfigError);
    EXPECT_THROW(run_partial_dqes(testutil::random_observable(5, 2, rng), 4), ConfigError);
    EXPECT_THROW(run_partial_dqes(testutil::random_observable(5, 2, rng), 0), ConfigError);
}

TEST(partial_dqes, full_when_k_equals_n) {
    auto obs = molecule_fixture("HeH+_100");
    EXPECT_EQ(landscape_csv(run_partial_dqes(obs, 2)), landscape_csv(run_full_dqes(obs, build_full_mub_set(2))));
}

TEST(landscape_properties, reevaluation_and_lower_bound) {
    Rng rng(99);
    for (int n = 1; n <= 6; ++n) {
        auto obs = testutil::random_observable(n, 6, rng);
        const int k = std::min(n, 3);
        auto report = run_partial_dqes(obs, k);
        auto set = build_full_mub_set(k);
        double lowest = 1e9;
        for (const auto& r : report.records) {
            // Independent route: tensor the K-qubit MUB state with |0> on the rest
            // by hand, then use the dense matrix.
            const auto& local = set.bases[r.spec.basis_index][r.spec.state_index];
            std::vector<Complex> amps(std::size_t{1} << n);
            for (std::size_t x = 0; x < local.dim(); ++x) {
                std::size_t full = 0;
                for (int j = 0; j < k; ++j)
                    if ((x >> (k - 1 - j)) & 1u) full |= std::size_t{1} << (n - r.spec.subset[j]);
                amps[full] = local[x];
            }
            auto state = StateVector(n, amps);
            EXPECT_NEAR(r.energy, testutil::dense_expectation(testutil::dense_matrix(obs), state).real(), 1e-12);
            lowest = std::min(lowest, r.energy);
        }
        EXPECT_GE(lowest, exact_spectrum(obs).ground_energy - 1e-12);
    }
}

TEST(landscape_properties, subset_coverage) {
    Rng rng(3);
    for (int n = 3; n <= 7; ++n) {
        for (int k = 1; k <= 3; ++k) {
            auto report = run_partial_dqes(testutil::random_observable(n, 3, rng), k);
            std::map<std::string, std::size_t> counts;
            for (const auto& r : report.records) ++counts[r.spec.subset_label()];
            const std::size_t per = ((std::size_t{1} << k) + 1) << k;
            EXPECT_EQ(counts.size(), qubit_subsets(n, k).size());
            for (const auto& [label, c] : counts) EXPECT_EQ(c, per) << label;
        }
    }
}

TEST(landscape_properties, deterministic_csv) {
    auto obs = maxcut_hamiltonian(random_graph(8, 0.5, 42));
    EXPECT_EQ(landscape_csv(run_partial_dqes(obs, 3, "g")), landscape_csv(run_partial_dqes(obs, 3, "g")));
    auto exact = run_partial_dqes(obs, 2, "g");
    EXPECT_EQ(landscape_csv(resample_landscape(exact, obs, 1000, 7)),
              landscape_csv(resample_landscape(exact, obs, 1000, 7)));
    EXPECT_EQ(landscape_sidecar(exact), landscape_sidecar(run_partial_dqes(obs, 2, "g")));
}

TEST(landscape_export, csv_format) {
    auto report = run_full_dqes(single_qubit_xy(), build_full_mub_set(1), "xy1");
    auto csv = landscape_csv(report);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,subset,basis,state,energy");
    EXPECT_NE(csv.find("\n3,1,1,1,-1\n"), std::string::npos);
    auto h2 = landscape_csv(run_full_dqes(molecule_fixture("H2_075"), build_full_mub_set(2)));
    EXPECT_NE(h2.find("\n1,1 2,0,1,-1.82172107\n"), std::string::npos);
}

TEST(basis_statistics, maxcut_computational_basis_varies_most) {
    for (std::uint64_t seed : {42u, 7u, 2024u}) {
        auto report = run_partial_dqes(maxcut_hamiltonian(random_graph(8, 0.5, seed)), 3);
        std::map<int, std::vector<double>> by_basis;
        for (const auto& r : report.records) by_basis[r.spec.basis_index].push_back(r.energy);
        auto stats = basis_statistics(report);
        ASSERT_EQ(stats.size(), 9u);
        for (const auto& s : stats) EXPECT_NEAR(s.variance, population_variance(by_basis[s.basis_index]), 1e-9);
        for (std::size_t b = 1; b < stats.size(); ++b) EXPECT_GT(stats[0].variance, stats[b].variance) << seed;
    }
}

TEST(basis_statistics, per_subset_split) {
    auto report = run_partial_dqes(transverse_field_ising(4, 0.5, 0.3), 2);
    auto stats = basis_statistics(report, true);
    EXPECT_EQ(stats.size(), 5u * 6u);
    for (const auto& s : stats) EXPECT_EQ(s.count, 4u);
    EXPECT_THROW(basis_statistics(LandscapeReport{}), ConfigError);
}

TEST(rank_initial_states, heh_plus_and_ties) {
    auto report = run_full_dqes(molecule_fixture("HeH+_100"), build_full_mub_set(2));
    auto top = rank_initial_states(report, 3);
    EXPECT_EQ(top[0].spec.basis_index, 0);
    EXPECT_EQ(top[0].spec.state_index, 1);
    EXPECT_NEAR(top[0].energy, -3.91127550, 1e-8);
    EXPECT_LT(top[0].energy, top[1].energy);

    auto all = rank_initial_states(report, report.records.size());
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_LE(all[i - 1].energy, all[i].energy);
        if (all[i - 1].energy == all[i].energy) EXPECT_LT(all[i - 1].index, all[i].index);
    }
    LandscapeReport ties = report;
    for (auto& r : ties.records) r.energy = r.spec.basis_index == 3 ? -1.0 : 0.5;
    auto tied = rank_initial_states(ties, 6);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(tied[i].index, 12 + i);
    EXPECT_EQ(tied[4].index, 0u);
    EXPECT_EQ(tied[5].index, 1u);
    EXPECT_THROW(rank_initial_states(report, 0), ConfigError);
    EXPECT_THROW(rank_initial_states(report, 21), ConfigError);
}
