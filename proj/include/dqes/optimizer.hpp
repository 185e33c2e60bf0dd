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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dqes/error.hpp"

namespace dqes {

struct OptimizerConfig {
    double rho_init = 0.5;  // initial trust radius, also the probe offset
    double tol = 1e-6;      // final trust radius
    int max_evals = 500;
    std::optional<double> threshold;  // stop once cost <= threshold
};

enum class Termination { Converged, MaxEvals, Threshold };

inline std::string to_string(Termination t) {
    switch (t) {
        case Termination::Converged: return "converged";
        case Termination::MaxEvals: return "max-evals";
        default: return "threshold";
    }
}

struct TraceEntry {
    int eval;  // 1-based
    std::vector<double> theta;
    double energy;
};

struct OptimizationTrace {
    std::vector<TraceEntry> entries;
    Termination termination = Termination::Converged;

    /// Index into `entries` of the lowest energy (first one on ties).
    std::size_t best_index() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < entries.size(); ++i)
            if (entries[i].energy < entries[best].energy) best = i;
        return best;
    }
    double final_energy() const { return entries.at(best_index()).energy; }
    const std::vector<double>& final_theta() const { return entries.at(best_index()).theta; }
};

using CostFunction = std::function<double(std::span<const double>)>;

namespace detail {

// Unconstrained linear-approximation trust-region minimizer in the style of
// Powell's COBYLA. The simplex is n+1 evaluated points; the linear
// interpolant through them supplies a gradient, and each trust-region step
// moves distance rho from the best vertex along the negative gradient.
class Cobyla {
   public:
    Cobyla(const CostFunction& cost, const OptimizerConfig& config) : cost_(cost), config_(config) {}

    OptimizationTrace run(const std::vector<double>& theta0) {
        const auto n = static_cast<Eigen::Index>(theta0.size());
        rho_ = config_.rho_init;
        points_.clear();
        values_.clear();

        Eigen::VectorXd x0 = Eigen::Map<const Eigen::VectorXd>(theta0.data(), n);
        if (!evaluate_into_simplex(x0)) return finish();
        best_ = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            Eigen::VectorXd x = x0;
            x(j) += rho_;
            if (!evaluate_into_simplex(x)) return finish();
            if (values_.back() < values_[best_]) best_ = points_.size() - 1;
        }
        if (n == 0) {
            trace_.termination = Termination::Converged;
            return finish();
        }

        while (true) {
            Model m = model();
            if (!m.acceptable) {
                if (!geometry_step(m)) return finish();
                continue;
            }
            const double gnorm = m.gradient.norm();
            bool good_step = false;
            if (gnorm > 0.0 && std::isfinite(gnorm)) {
                Eigen::VectorXd dx = -rho_ / gnorm * m.gradient;
                const double predicted = rho_ * gnorm;
                const double f_best = values_[best_];
                auto f_new = evaluate(points_[best_] + dx);
                if (!f_new) return finish();
                const double actual = f_best - *f_new;
                replace_vertex(m, dx, *f_new, actual);
                good_step = actual > 0.0 && actual >= 0.1 * predicted;
            }
            if (good_step) continue;
            if (gnorm > 0.0 && !model().acceptable) continue;
            if (rho_ <= config_.tol) {
                trace_.termination = Termination::Converged;
                return finish();
            }
            rho_ *= 0.5;
            if (rho_ <= 1.5 * config_.tol) rho_ = config_.tol;
        }
    }

   private:
    struct Model {
        Eigen::VectorXd gradient;
        Eigen::MatrixXd inverse;  // column j: dual vector of vertex order[j]
        std::vector<std::size_t> order;
        std::vector<double> veta, vsig;
        bool acceptable = false;
        bool singular = false;
    };

    Model model() const {
        Model m;
        const auto n = static_cast<Eigen::Index>(points_.size() - 1);
        Eigen::MatrixXd offsets(n, n);
        Eigen::VectorXd df(n);
        Eigen::Index row = 0;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (i == best_) continue;
            offsets.row(row) = (points_[i] - points_[best_]).transpose();
            df(row) = values_[i] - values_[best_];
            m.order.push_back(i);
            ++row;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(offsets);
        if (!lu.isInvertible()) {
            m.singular = true;
            return m;
        }
        m.inverse = lu.inverse();
        m.gradient = m.inverse * df;
        const double parsig = 0.25 * rho_, pareta = 2.1 * rho_;
        m.acceptable = true;
        for (Eigen::Index j = 0; j < n; ++j) {
            double veta = offsets.row(j).norm();
            double vsig = 1.0 / m.inverse.col(j).norm();
            m.veta.push_back(veta);
            m.vsig.push_back(vsig);
            if (vsig < parsig || veta > pareta) m.acceptable = false;
        }
        return m;
    }

    // Replaces the vertex that most damages the simplex with a point at
    // distance rho/2 from the best vertex, normal to the opposite face.
    bool geometry_step(const Model& m) {
        const auto n = static_cast<Eigen::Index>(points_.size() - 1);
        if (m.singular) {
            // Rebuild a coordinate simplex around the best vertex.
            Eigen::VectorXd base = points_[best_];
            for (Eigen::Index j = 0; j < n; ++j) {
                const std::size_t slot = m.order.empty() ? 0 : m.order[static_cast<std::size_t>(j)];
                Eigen::VectorXd x = base;
                x(j) += rho_;
                auto f = evaluate(x);
                if (!f) return false;
                points_[slot] = x;
                values_[slot] = *f;
            }
            update_best();
            return true;
        }
        const double pareta = 2.1 * rho_;
        Eigen::Index pick = -1;
        double worst = pareta;
        for (Eigen::Index j = 0; j < n; ++j)
            if (m.veta[j] > worst) {
                worst = m.veta[j];
                pick = j;
            }
        if (pick < 0) {
            double smallest = std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < n; ++j)
                if (m.vsig[j] < smallest) {
                    smallest = m.vsig[j];
                    pick = j;
                }
        }
        Eigen::VectorXd dx = 0.5 * rho_ * m.vsig[pick] * m.inverse.col(pick);
        if (m.gradient.dot(dx) > 0.0) dx = -dx;
        auto f = evaluate(points_[best_] + dx);
        if (!f) return false;
        const std::size_t slot = m.order[static_cast<std::size_t>(pick)];
        points_[slot] = points_[best_] + dx;
        values_[slot] = *f;
        if (*f < values_[best_]) best_ = slot;
        return true;
    }

    // Chooses which vertex the trial point replaces (if any).
    void replace_vertex(const Model& m, const Eigen::VectorXd& dx, double f_new, double actual) {
        const auto n = static_cast<Eigen::Index>(points_.size() - 1);
        const double parsig = 0.25 * rho_;
        double ratio = actual <= 0.0 ? 1.0 : 0.0;
        Eigen::Index drop = -1;
        std::vector<double> sigbar(static_cast<std::size_t>(n));
        for (Eigen::Index j = 0; j < n; ++j) {
            double t = std::abs(m.inverse.col(j).dot(dx));
            if (t > ratio) {
                drop = j;
                ratio = t;
            }
            sigbar[j] = t * m.vsig[j];
        }
        double edgmax = 1.1 * rho_;
        Eigen::Index far = -1;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (sigbar[j] >= parsig || sigbar[j] >= m.vsig[j]) {
                double t = m.veta[j];
                if (actual > 0.0) t = (dx - (points_[m.order[j]] - points_[best_])).norm();
                if (t > edgmax) {
                    far = j;
                    edgmax = t;
                }
            }
        }
        if (far >= 0) drop = far;
        if (drop < 0) return;
        const std::size_t slot = m.order[static_cast<std::size_t>(drop)];
        points_[slot] = points_[best_] + dx;
        values_[slot] = f_new;
        if (f_new < values_[best_]) best_ = slot;
    }

    void update_best() {
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] < values_[best_]) best_ = i;
    }

    // Evaluates and records; nullopt when the run must stop.
    std::optional<double> evaluate(const Eigen::VectorXd& x) {
        if (stopped_) return std::nullopt;
        if (static_cast<int>(trace_.entries.size()) >= config_.max_evals) {
            trace_.termination = Termination::MaxEvals;
            stopped_ = true;
            return std::nullopt;
        }
        std::vector<double> theta(x.data(), x.data() + x.size());
        double f = cost_(theta);
        if (std::isnan(f)) f = std::numeric_limits<double>::infinity();
        trace_.entries.push_back({static_cast<int>(trace_.entries.size()) + 1, std::move(theta), f});
        if (config_.threshold && f <= *config_.threshold) {
            trace_.termination = Termination::Threshold;
            stopped_ = true;
        }
        return f;
    }

    bool evaluate_into_simplex(const Eigen::VectorXd& x) {
        auto f = evaluate(x);
        if (!f) return false;
        points_.push_back(x);
        values_.push_back(*f);
        return !stopped_;
    }

    OptimizationTrace finish() { return std::move(trace_); }

    const CostFunction& cost_;
    OptimizerConfig config_;
    OptimizationTrace trace_;
    std::vector<Eigen::VectorXd> points_;
    std::vector<double> values_;
    std::size_t best_ = 0;
    double rho_ = 0.0;
    bool stopped_ = false;
};

}  // namespace detail

inline void validate_config(const OptimizerConfig& config, std::size_t dim) {
    if (!(config.rho_init > 0.0)) throw ConfigError("rho_init must be positive");
    if (!(config.tol > 0.0)) throw ConfigError("tol must be positive");
    if (config.tol > config.rho_init) throw ConfigError("tol must not exceed rho_init");
    if (config.max_evals < static_cast<int>(dim) + 2) {
        throw ConfigError("max_evals must be at least dim + 2 = " + std::to_string(dim + 2));
    }
}

/// Derivative-free minimization. Evaluation 1 is theta0, evaluations
/// 2..dim+1 offset one coordinate each by +rho_init; later points come from
/// linear models on the simplex inside a trust radius that halves toward tol.
inline OptimizationTrace minimize(const CostFunction& cost, const std::vector<double>& theta0,
                                  const OptimizerConfig& config = {}) {
    validate_config(config, theta0.size());
    return detail::Cobyla(cost, config).run(theta0);
}

}  // namespace dqes
