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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dqes/ansatz.hpp"
#include "dqes/format.hpp"
#include "dqes/mub.hpp"
#include "dqes/observable_io.hpp"
#include "dqes/optimizer.hpp"
#include "dqes/pauli.hpp"
#include "dqes/random.hpp"

namespace dqes {

/// <obs> at U(params)|initial>.
inline double vqe_cost(const AnsatzSpec& ansatz, std::span<const double> params, const Observable& obs,
                       const StateVector& initial) {
    check_same_size(obs.qubits(), ansatz.n, "vqe_cost");
    return expectation_exact(obs, prepare_state(ansatz, params, initial));
}

/// Haar-random pure state from normalized complex Gaussian amplitudes.
inline StateVector haar_random_state(int n, std::uint64_t seed) {
    check_qubit_count(n);
    Rng rng(seed);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto& a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = {re, im};
    }
    return StateVector::normalized(n, std::move(amps));
}

struct FitConfig {
    int starts = 32;
    std::uint64_t seed = 0;
    double fidelity_target = 1.0 - 1e-9;
    int max_evals_per_start = 4000;
};

struct FitResult {
    bool reachable = false;
    ParameterVector params;  // best found, even when unreachable
    double fidelity = 0.0;
};

/// Multi-start search for theta with |<target|U(theta)|0>|^2 >= fidelity_target.
inline FitResult fit_parameters_to_state(const AnsatzSpec& ansatz, const StateVector& target,
                                         const FitConfig& config = {}) {
    check_same_size(target.qubits(), ansatz.n, "fit_parameters_to_state");
    const StateVector zero = zero_state(ansatz.n);
    const std::size_t dim = ansatz.parameter_count();
    auto infidelity = [&](std::span<const double> theta) {
        return 1.0 - fidelity(target, prepare_state(ansatz, theta, zero));
    };
    FitResult result;
    result.params.assign(dim, 0.0);
    result.fidelity = fidelity(target, zero);
    Rng rng(config.seed);
    OptimizerConfig opt;
    opt.rho_init = 0.5;
    opt.tol = 1e-9;
    opt.max_evals = std::max<int>(config.max_evals_per_start, static_cast<int>(dim) + 2);
    opt.threshold = 1.0 - config.fidelity_target;
    for (int s = 0; s < config.starts && result.fidelity < config.fidelity_target; ++s) {
        std::vector<double> theta0(dim);
        for (auto& t : theta0) t = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
        auto trace = minimize(infidelity, theta0, opt);
        double f = 1.0 - trace.final_energy();
        if (f > result.fidelity) {
            result.fidelity = f;
            result.params = trace.final_theta();
        }
    }
    result.reachable = result.fidelity >= config.fidelity_target;
    if (result.reachable) {
        // Polish: energies at the fitted state should match the target's to
        // about 1e-8, which needs infidelity well below the acceptance target.
        OptimizerConfig polish;
        polish.rho_init = 1e-2;
        polish.tol = 1e-12;
        polish.max_evals = std::max<int>(2000, static_cast<int>(dim) + 2);
        polish.threshold = 1e-15;
        auto trace = minimize(infidelity, result.params, polish);
        if (1.0 - trace.final_energy() > result.fidelity) {
            result.fidelity = 1.0 - trace.final_energy();
            result.params = trace.final_theta();
        }
    }
    return result;
}

/// Prepare the MUB state of `spec`, then optimize the ansatz on top of it
/// starting from theta0 (all zeros when empty).
struct ShiftedMubInit {
    PartialMubSpec spec;
    ParameterVector theta0;
};

/// Fit ansatz parameters so that U(theta)|0> is the MUB state of `spec`,
/// then optimize from those parameters.
struct ParameterFitInit {
    PartialMubSpec spec;
};

/// Optimize U(theta)|0> from the given parameters.
struct RawParamsInit {
    ParameterVector theta;
};

/// Optimize U(theta)|initial> from theta = 0; used for random-state baselines.
struct StateInit {
    StateVector initial;
    std::string descriptor;
};

using InitStrategy = std::variant<ShiftedMubInit, ParameterFitInit, RawParamsInit, StateInit>;

struct VqeResult {
    OptimizationTrace trace;
    double final_energy;
    StateVector final_state;
    StateVector initial_state;  // the state the ansatz acts on
    ParameterVector theta0;
    std::string init_descriptor;
    bool fallback_used = false;
    std::optional<double> fit_fidelity;
};

inline std::string describe(const PartialMubSpec& spec) { return "mub:" + spec.label(); }

/// Runs the optimizer from the chosen initialization. When a parameter fit
/// is unreachable and `allow_fallback` is set, the run falls back to the
/// shifted-MUB initialization at theta0 = 0 and records that in the result.
inline VqeResult run_vqe(const Observable& obs, const InitStrategy& init, const AnsatzSpec& ansatz,
                         const OptimizerConfig& config = {}, bool allow_fallback = true,
                         const FitConfig& fit_config = {}) {
    check_same_size(obs.qubits(), ansatz.n, "run_vqe");
    const std::size_t dim = ansatz.parameter_count();
    std::optional<StateVector> initial;
    ParameterVector theta0;
    std::string descriptor;
    bool fallback = false;
    std::optional<double> fit_fidelity;

    auto mub_state = [&](const PartialMubSpec& spec) {
        check_same_size(spec.n, obs.qubits(), "initial MUB spec");
        return realize_partial_state(spec, build_full_mub_set(spec.k));
    };

    if (const auto* s = std::get_if<ShiftedMubInit>(&init)) {
        initial = mub_state(s->spec);
        theta0 = s->theta0.empty() ? ParameterVector(dim, 0.0) : s->theta0;
        descriptor = "shifted-" + describe(s->spec);
    } else if (const auto* f = std::get_if<ParameterFitInit>(&init)) {
        auto target = mub_state(f->spec);
        auto fit = fit_parameters_to_state(ansatz, target, fit_config);
        fit_fidelity = fit.fidelity;
        if (fit.reachable) {
            initial = zero_state(obs.qubits());
            theta0 = fit.params;
            descriptor = "fit-" + describe(f->spec);
        } else {
            if (!allow_fallback) {
                throw ConfigError("MUB state " + f->spec.label() + " is unreachable by the ansatz (best fidelity " +
                                  std::to_string(fit.fidelity) + ")");
            }
            initial = std::move(target);
            theta0.assign(dim, 0.0);
            descriptor = "shifted-" + describe(f->spec);
            fallback = true;
        }
    } else if (const auto* r = std::get_if<RawParamsInit>(&init)) {
        initial = zero_state(obs.qubits());
        theta0 = r->theta;
        descriptor = "params";
    } else {
        const auto& st = std::get<StateInit>(init);
        check_same_size(st.initial.qubits(), obs.qubits(), "initial state");
        initial = st.initial;
        theta0.assign(dim, 0.0);
        descriptor = st.descriptor.empty() ? "state" : st.descriptor;
    }
    check_parameters(ansatz, theta0);

    const StateVector& psi0 = *initial;
    auto cost = [&](std::span<const double> theta) { return vqe_cost(ansatz, theta, obs, psi0); };
    auto trace = minimize(cost, theta0, config);
    auto final_state = prepare_state(ansatz, trace.final_theta(), psi0);
    double final_energy = trace.final_energy();
    return {std::move(trace), final_energy, std::move(final_state), psi0, std::move(theta0),
            std::move(descriptor), fallback, fit_fidelity};
}

/// `eval,energy,theta_0,...,theta_{m-1}`.
inline std::string trace_csv(const OptimizationTrace& trace) {
    std::string out = "eval,energy";
    const std::size_t m = trace.entries.empty() ? 0 : trace.entries.front().theta.size();
    for (std::size_t j = 0; j < m; ++j) out += ",theta_" + std::to_string(j);
    out += "\n";
    for (const auto& e : trace.entries) {
        out += std::to_string(e.eval) + "," + format_g12(e.energy);
        for (double t : e.theta) out += "," + format_g12(t);
        out += "\n";
    }
    return out;
}

/// Bloch coordinates of every evaluated 1-qubit state, as `eval,x,y,z`.
inline std::string bloch_path_csv(const AnsatzSpec& ansatz, const StateVector& initial,
                                  const OptimizationTrace& trace) {
    if (ansatz.n != 1) throw DimensionError("Bloch paths need a 1-qubit ansatz");
    std::string out = "eval,x,y,z\n";
    for (const auto& e : trace.entries) {
        auto b = bloch_coordinates(prepare_state(ansatz, e.theta, initial));
        out += std::to_string(e.eval) + "," + format_g12(b.x) + "," + format_g12(b.y) + "," + format_g12(b.z) + "\n";
    }
    return out;
}

inline OrderedJson config_json(const OptimizerConfig& c) {
    OrderedJson j;
    j["rho_init"] = c.rho_init;
    j["tol"] = c.tol;
    j["max_evals"] = c.max_evals;
    j["threshold"] = c.threshold ? OrderedJson(*c.threshold) : OrderedJson(nullptr);
    return j;
}

inline OrderedJson result_json(const VqeResult& r, const OptimizerConfig& config, std::optional<std::uint64_t> seed) {
    OrderedJson j;
    j["init"] = r.init_descriptor;
    j["final_energy"] = r.final_energy;
    j["evaluations"] = r.trace.entries.size();
    j["termination"] = to_string(r.trace.termination);
    j["fallback_used"] = r.fallback_used;
    j["fit_fidelity"] = r.fit_fidelity ? OrderedJson(*r.fit_fidelity) : OrderedJson(nullptr);
    j["seed"] = seed ? OrderedJson(*seed) : OrderedJson(nullptr);
    j["config"] = config_json(config);
    return j;
}

}  // namespace dqes
