// Copyright 2026 The qvarsched Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvarsched/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "qvarsched/errors.hpp"

namespace qvarsched {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct BudgetExhausted {};

/// Counts evaluations, records the trace and remembers the best point.
class Tracker {
  public:
    Tracker(const Objective &objective, std::size_t budget)
        : objective_(objective), budget_(budget) {}

    double operator()(const VectorXd &x) {
        if (result_.evaluations >= budget_) {
            throw BudgetExhausted{};
        }
        const double f = objective_(std::span<const double>(x.data(), x.size()));
        if (!std::isfinite(f)) {
            throw NonFiniteObjective("objective returned a non-finite value");
        }
        ++result_.evaluations;
        result_.trace.push_back(f);
        if (result_.parameters.empty() || f < result_.value) {
            result_.value = f;
            result_.parameters.assign(x.data(), x.data() + x.size());
        }
        return f;
    }

    [[nodiscard]] bool exhausted() const noexcept { return result_.evaluations >= budget_; }
    MinimizeResult take() { return std::move(result_); }

  private:
    const Objective &objective_;
    std::size_t budget_;
    MinimizeResult result_;
};

/// Unit vector orthogonal to every displacement row except `skip`.
VectorXd orthogonal_direction(const MatrixXd &displacements, Eigen::Index skip) {
    const Eigen::Index n = displacements.cols();
    MatrixXd others(n - 1, n);
    for (Eigen::Index k = 0, r = 0; k < n; ++k) {
        if (k != skip) {
            others.row(r++) = displacements.row(k);
        }
    }
    VectorXd v;
    if (n == 1) {
        v = VectorXd::Ones(1);
    } else {
        Eigen::FullPivLU<MatrixXd> lu(others);
        const MatrixXd kernel = lu.kernel();
        v = kernel.col(0);
        if (v.norm() == 0.0) {
            v = VectorXd::Unit(n, skip);
        }
    }
    return v.normalized();
}

void run_linear_trust_region(Tracker &f, const VectorXd &x0, const OptimizerConfig &config) {
    const Eigen::Index n = x0.size();
    const double rho_end = config.final_trust_radius;
    const double delta_max = config.initial_trust_radius;
    double rho = config.initial_trust_radius;
    double delta = rho;

    // Simplex vertices and objective values. Vertex 0 is x0.
    std::vector<VectorXd> points;
    std::vector<double> values;
    points.push_back(x0);
    values.push_back(f(x0));
    for (Eigen::Index i = 0; i < n; ++i) {
        VectorXd x = x0;
        x[i] += rho;
        points.push_back(x);
        values.push_back(f(x));
    }

    std::size_t opt = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] < values[opt]) {
            opt = k;
        }
    }

    while (!f.exhausted()) {
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        if (*hi - *lo < config.tolerance) {
            return;
        }

        // Rows: displacement of each non-optimal vertex from the optimum.
        std::vector<std::size_t> index;
        MatrixXd d(n, n);
        VectorXd df(n);
        for (std::size_t k = 0, r = 0; k < points.size(); ++k) {
            if (k == opt) {
                continue;
            }
            index.push_back(k);
            d.row(static_cast<Eigen::Index>(r)) = (points[k] - points[opt]).transpose();
            df[static_cast<Eigen::Index>(r)] = values[k] - values[opt];
            ++r;
        }
        Eigen::FullPivLU<MatrixXd> lu(d);

        // Geometry: a vertex too far from the optimum, or a nearly flat simplex.
        Eigen::Index replace = -1;
        double worst_distance = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
            const double dist = d.row(r).norm();
            if (dist > 2.0 * rho && dist > worst_distance) {
                worst_distance = dist;
                replace = r;
            }
        }
        if (replace < 0) {
            if (!lu.isInvertible()) {
                replace = 0;
            } else {
                const MatrixXd inverse = lu.inverse();
                double worst = 0.0;
                for (Eigen::Index r = 0; r < n; ++r) {
                    // Column r of D^-1 is dual to row r; a long dual vector
                    // means the row is close to the span of the others.
                    const double conditioning = inverse.col(r).norm() * rho;
                    if (conditioning > 10.0 && conditioning > worst) {
                        worst = conditioning;
                        replace = r;
                    }
                }
            }
        }
        if (replace >= 0) {
            VectorXd v = orthogonal_direction(d, replace);
            if (lu.isInvertible()) {
                const VectorXd g = lu.solve(df);
                if (g.dot(v) > 0.0) {
                    v = -v;
                }
            }
            const VectorXd x = points[opt] + rho * v;
            const double fx = f(x);
            const auto k = index[static_cast<std::size_t>(replace)];
            points[k] = x;
            values[k] = fx;
            if (fx < values[opt]) {
                opt = k;
            }
            continue;
        }

        const VectorXd g = lu.solve(df);
        const double gnorm = g.norm();
        bool success = false;
        if (gnorm > 0.0 && std::isfinite(gnorm)) {
            const VectorXd step = -delta / gnorm * g;
            const VectorXd x = points[opt] + step;
            const double fx = f(x);
            const double predicted = delta * gnorm;
            const double ratio = (values[opt] - fx) / predicted;

            // Vertex whose replacement best preserves the simplex volume.
            const VectorXd lambda = lu.transpose().solve(step);
            Eigen::Index slot = -1;
            double best_score = 0.0;
            for (Eigen::Index r = 0; r < n; ++r) {
                const auto k = index[static_cast<std::size_t>(r)];
                if (fx >= values[opt] && values[k] <= fx) {
                    continue;
                }
                const double weight = std::max(1.0, d.row(r).norm() / delta);
                const double score = std::abs(lambda[r]) * weight * weight;
                if (score > best_score) {
                    best_score = score;
                    slot = r;
                }
            }
            if (slot >= 0) {
                const auto k = index[static_cast<std::size_t>(slot)];
                points[k] = x;
                values[k] = fx;
                if (fx < values[opt]) {
                    opt = k;
                }
            }
            if (ratio >= 0.75) {
                delta = std::min(2.0 * delta, delta_max);
                success = true;
            } else if (ratio >= 0.1) {
                success = true;
            } else if (delta > rho) {
                delta = std::max(0.5 * delta, rho);
                continue;
            }
            if (success) {
                continue;
            }
        }
        if (!success) {
            if (rho <= rho_end) {
                return;
            }
            rho = std::max(0.5 * rho, rho_end);
            delta = rho;
        }
    }
}

void run_nelder_mead(Tracker &f, const VectorXd &x0, const OptimizerConfig &config) {
    const Eigen::Index n = x0.size();
    std::vector<VectorXd> simplex{x0};
    std::vector<double> values{f(x0)};
    for (Eigen::Index i = 0; i < n; ++i) {
        VectorXd x = x0;
        x[i] += config.initial_trust_radius;
        simplex.push_back(x);
        values.push_back(f(x));
    }
    std::vector<std::size_t> order(simplex.size());
    while (!f.exhausted()) {
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const auto best = order.front();
        const auto worst = order.back();
        const auto second = order[order.size() - 2];

        double size = 0.0;
        for (const auto &x : simplex) {
            size = std::max(size, (x - simplex[best]).norm());
        }
        if (values[worst] - values[best] < config.tolerance ||
            size < config.final_trust_radius) {
            return;
        }

        VectorXd centroid = VectorXd::Zero(n);
        for (std::size_t k = 0; k < simplex.size(); ++k) {
            if (k != worst) centroid += simplex[k];
        }
        centroid /= static_cast<double>(n);

        const VectorXd reflected = centroid + (centroid - simplex[worst]);
        const double fr = f(reflected);
        if (fr < values[best]) {
            const VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
            const double fe = f(expanded);
            if (fe < fr) {
                simplex[worst] = expanded;
                values[worst] = fe;
            } else {
                simplex[worst] = reflected;
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = reflected;
            values[worst] = fr;
            continue;
        }
        const bool outside = fr < values[worst];
        const VectorXd contracted = outside ? VectorXd(centroid + 0.5 * (reflected - centroid))
                                            : VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
        const double fc = f(contracted);
        if (fc < std::min(fr, values[worst])) {
            simplex[worst] = contracted;
            values[worst] = fc;
            continue;
        }
        for (std::size_t k = 0; k < simplex.size(); ++k) {
            if (k == best) continue;
            simplex[k] = simplex[best] + 0.5 * (simplex[k] - simplex[best]);
            values[k] = f(simplex[k]);
        }
    }
}

} // namespace

std::optional<OptimizerMethod> optimizer_method_from_name(std::string_view name) {
    if (name == "cobyla") return OptimizerMethod::cobyla;
    if (name == "nelder-mead" || name == "nelder_mead") return OptimizerMethod::nelder_mead;
    return std::nullopt;
}

std::string optimizer_method_name(OptimizerMethod method) {
    return method == OptimizerMethod::cobyla ? "cobyla" : "nelder-mead";
}

void OptimizerConfig::validate() const {
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (!(initial_trust_radius > 0.0) || !(final_trust_radius > 0.0) ||
        final_trust_radius > initial_trust_radius) {
        throw std::invalid_argument("trust radii must satisfy 0 < final <= initial");
    }
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
}

MinimizeResult minimize(const Objective &objective, std::vector<double> x0,
                        const OptimizerConfig &config) {
    config.validate();
    Tracker tracker(objective, config.max_iterations);
    const VectorXd start = Eigen::Map<const VectorXd>(x0.data(), static_cast<Eigen::Index>(x0.size()));
    try {
        if (start.size() == 0) {
            tracker(start);
        } else if (config.method == OptimizerMethod::cobyla) {
            run_linear_trust_region(tracker, start, config);
        } else {
            run_nelder_mead(tracker, start, config);
        }
    } catch (const BudgetExhausted &) {
    }
    return tracker.take();
}

} // namespace qvarsched
