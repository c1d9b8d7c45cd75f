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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qvarsched {

enum class OptimizerMethod { cobyla, nelder_mead };

[[nodiscard]] std::optional<OptimizerMethod> optimizer_method_from_name(std::string_view name);
[[nodiscard]] std::string optimizer_method_name(OptimizerMethod method);

enum class InitialPoint { uniform, zero };

struct OptimizerConfig {
    OptimizerMethod method = OptimizerMethod::cobyla;
    /// Budget of objective evaluations for one optimizer run.
    std::size_t max_iterations = 1000;
    /// Stop once the spread of objective values over the working simplex
    /// falls below this value.
    double tolerance = 1e-8;
    double initial_trust_radius = 1.0;
    double final_trust_radius = 1e-4;
    InitialPoint initial_point = InitialPoint::uniform;
    /// Independent runs from fresh initial points; the best one is kept.
    std::size_t restarts = 10;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when an invariant does not hold.
    void validate() const;
};

struct MinimizeResult {
    std::vector<double> parameters;
    double value = 0.0;
    /// Every evaluated objective value, in evaluation order.
    std::vector<double> trace;
    std::size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free minimisation from x0. The cobyla method builds linear
/// interpolation models on a simplex of n + 1 points and takes steps to
/// the edge of a shrinking trust region; nelder_mead is the classic simplex
/// search. The returned point is the best one evaluated. Throws
/// NonFiniteObjective if the objective returns NaN or infinity.
[[nodiscard]] MinimizeResult minimize(const Objective &objective, std::vector<double> x0,
                                      const OptimizerConfig &config);

} // namespace qvarsched
