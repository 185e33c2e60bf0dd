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
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dqes/error.hpp"
#include "dqes/format.hpp"
#include "dqes/mub.hpp"
#include "dqes/observable_io.hpp"
#include "dqes/parallel.hpp"
#include "dqes/pauli.hpp"

namespace dqes {

struct LandscapeRecord {
    PartialMubSpec spec;
    double energy;

    std::string state_label() const { return spec.label(); }
};

struct BasisSummary {
    int basis_index;
    std::string subset;  // empty when aggregated over subsets
    std::size_t count;
    double min, max, mean, variance;
};

struct LandscapeReport {
    std::string observable_name;
    std::string observable_hash;
    int n = 0;
    int k = 0;
    std::string mub_description;
    std::vector<LandscapeRecord> records;  // enumeration order
    std::optional<std::int64_t> shots;     // set for shot-sampled sweeps
    std::optional<std::uint64_t> seed;

    bool full() const { return n == k; }
};

namespace detail {

inline LandscapeReport sweep(const Observable& obs, const MubSet& set, std::vector<PartialMubSpec> specs,
                             std::string name) {
    LandscapeReport report;
    report.observable_name = std::move(name);
    report.observable_hash = observable_hash(obs);
    report.n = obs.qubits();
    report.k = set.n;
    report.mub_description = "full MUB set on " + std::to_string(set.n) + " qubits (" +
                             std::to_string(set.bases.size()) + " bases x " + std::to_string(set.dim()) +
                             " states)";
    std::vector<double> energies(specs.size());
    parallel_for(specs.size(), [&](std::size_t i) {
        energies[i] = expectation_exact(obs, realize_partial_state(specs[i], set));
    });
    report.records.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) report.records.push_back({std::move(specs[i]), energies[i]});
    return report;
}

}  // namespace detail

/// Exact cost at every state of a full MUB set on all n qubits.
inline LandscapeReport run_full_dqes(const Observable& obs, const MubSet& set, std::string name = {}) {
    if (obs.qubits() > kMaxMubQubits) {
        throw ConfigError("full DQES needs n <= 3; use a partial sweep for " + std::to_string(obs.qubits()) +
                          " qubits");
    }
    check_same_size(set.n, obs.qubits(), "full DQES");
    return detail::sweep(obs, set, enumerate_partial_specs(obs.qubits(), obs.qubits()), std::move(name));
}

/// Exact cost at every K-qubit MUB state on every K-subset, |0> elsewhere.
inline LandscapeReport run_partial_dqes(const Observable& obs, int k, std::string name = {}) {
    check_partial_constant(obs.qubits(), k);
    MubSet set = build_full_mub_set(k);
    return detail::sweep(obs, set, enumerate_partial_specs(obs.qubits(), k), std::move(name));
}

/// Replaces every energy with a shot-sampled estimate; record i uses seed + i.
inline LandscapeReport resample_landscape(const LandscapeReport& exact, const Observable& obs, std::int64_t shots,
                                          std::uint64_t seed) {
    if (shots < 1) throw ConfigError("shots must be positive");
    MubSet set = build_full_mub_set(exact.k);
    LandscapeReport out = exact;
    out.shots = shots;
    out.seed = seed;
    parallel_for(out.records.size(), [&](std::size_t i) {
        auto state = realize_partial_state(out.records[i].spec, set);
        out.records[i].energy = expectation_sampled(obs, state, shots, seed + i).mean;
    });
    return out;
}

namespace detail {

inline BasisSummary summarize(int basis, std::string subset, const std::vector<double>& values) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    double mean = 0.0;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return {basis, std::move(subset), values.size(), lo, hi, mean, var};
}

}  // namespace detail

/// Min, max, mean and population variance per basis index, aggregated over
/// qubit subsets unless `per_subset` is set. Sorted by basis index.
inline std::vector<BasisSummary> basis_statistics(const LandscapeReport& report, bool per_subset = false) {
    if (report.records.empty()) throw ConfigError("cannot summarize an empty landscape");
    std::vector<BasisSummary> out;
    const int bases = (1 << report.k) + 1;
    for (int b = 0; b < bases; ++b) {
        if (!per_subset) {
            std::vector<double> values;
            for (const auto& r : report.records)
                if (r.spec.basis_index == b) values.push_back(r.energy);
            if (!values.empty()) out.push_back(detail::summarize(b, {}, values));
            continue;
        }
        std::vector<std::string> subsets;
        for (const auto& r : report.records) {
            auto label = r.spec.subset_label();
            if (subsets.empty() || subsets.back() != label) subsets.push_back(label);
        }
        subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
        for (const auto& sub : subsets) {
            std::vector<double> values;
            for (const auto& r : report.records)
                if (r.spec.basis_index == b && r.spec.subset_label() == sub) values.push_back(r.energy);
            if (!values.empty()) out.push_back(detail::summarize(b, sub, values));
        }
    }
    return out;
}

struct RankedState {
    std::size_t index;  // position in the report
    PartialMubSpec spec;
    double energy;
};

/// The k lowest-energy records, ascending; ties keep enumeration order.
inline std::vector<RankedState> rank_initial_states(const LandscapeReport& report, std::size_t k) {
    if (k == 0) throw ConfigError("k must be positive");
    if (k > report.records.size()) {
        throw ConfigError("k = " + std::to_string(k) + " exceeds " + std::to_string(report.records.size()) +
                          " records");
    }
    std::vector<std::size_t> order(report.records.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.records[a].energy < report.records[b].energy;
    });
    std::vector<RankedState> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back({order[i], report.records[order[i]].spec, report.records[order[i]].energy});
    return out;
}

/// `index,subset,basis,state,energy`; subset qubits are space separated.
inline std::string landscape_csv(const LandscapeReport& report) {
    std::string out = "index,subset,basis,state,energy\n";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        out += std::to_string(i) + "," + r.spec.subset_label() + "," + std::to_string(r.spec.basis_index) + "," +
               std::to_string(r.spec.state_index) + "," + format_g12(r.energy) + "\n";
    }
    return out;
}

inline std::string landscape_sidecar(const LandscapeReport& report) {
    OrderedJson doc;
    doc["observable"] = report.observable_name;
    doc["observable_hash"] = report.observable_hash;
    doc["n"] = report.n;
    doc["k"] = report.k;
    doc["mode"] = report.full() ? "full" : "partial";
    doc["mub_set"] = report.mub_description;
    doc["records"] = report.records.size();
    doc["shots"] = report.shots ? OrderedJson(*report.shots) : OrderedJson(nullptr);
    doc["seed"] = report.seed ? OrderedJson(*report.seed) : OrderedJson(nullptr);
    doc["tool_version"] = kToolVersion;
    return doc.dump(2) + "\n";
}

inline std::string statistics_csv(const std::vector<BasisSummary>& table) {
    std::string out = "basis,subset,count,min,max,mean,variance\n";
    for (const auto& s : table) {
        out += std::to_string(s.basis_index) + "," + s.subset + "," + std::to_string(s.count) + "," +
               format_g12(s.min) + "," + format_g12(s.max) + "," + format_g12(s.mean) + "," +
               format_g12(s.variance) + "\n";
    }
    return out;
}

}  // namespace dqes
