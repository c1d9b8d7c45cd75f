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

#include <filesystem>
#include <string>
#include <string_view>

#include "qvarsched/encoder.hpp"
#include "qvarsched/metrics_bench.hpp"
#include "qvarsched/problem_model.hpp"

namespace qvarsched {

/// Value of the mandatory `format` key / first dump line.
inline constexpr std::string_view kFormatTag = "qvarsched-v1";

/// Problem document:
///
///   format: qvarsched-v1
///   variant: EOHL
///   processes:
///     - {weight: 2, values: [2, 1]}
///   nodes:
///     - {capacity: 3, threshold: 2}
///
/// Values accept integers, decimals and p/q fractions. Throws ParseError
/// naming the offending field and its 1-based line.
[[nodiscard]] AssignmentProblem parse_problem(std::string_view text);
[[nodiscard]] AssignmentProblem load_problem(const std::filesystem::path &path);
[[nodiscard]] std::string write_problem(const AssignmentProblem &problem);

/// Experiment document; `problem` is resolved relative to base_dir.
///
///   format: qvarsched-v1
///   problem: eohl.yaml
///   instance_id: eohl        # optional, defaults to the problem file stem
///   algorithm: {ansatz: A4}  # or {ansatz: QAOA, reps: 3}
///   optimizer: {method: cobyla, max_iterations: 1000, restarts: 10,
///               tolerance: 1e-8, initial_point: uniform}
///   mode: exact              # or sampled
///   shots: 4096
///   runs: 10
///   seed: 7
///   max_qubits: 24
///   output: results/eohl     # optional; .csv and .json are appended
struct ExperimentFile {
    ExperimentSpec spec;
    std::filesystem::path problem_path;
    std::filesystem::path output; ///< empty when not given
};

[[nodiscard]] ExperimentFile parse_experiment(std::string_view text,
                                              const std::filesystem::path &base_dir);
[[nodiscard]] ExperimentFile load_experiment(const std::filesystem::path &path);

/// Line-oriented dump: a header, `qubits`, `penalty`, `constant`, then
/// `i coefficient` per non-zero linear term and `i j coefficient` per
/// pairwise term (0-based qubits). Lines starting with '#' are comments.
[[nodiscard]] std::string write_ising(const IsingModel &model, const VariableLayout *layout = nullptr);
[[nodiscard]] IsingModel parse_ising(std::string_view text);

} // namespace qvarsched
