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
#include <string>
#include <vector>

#include "qvarsched/circuit.hpp"
#include "qvarsched/circuits.hpp"
#include "qvarsched/encoder.hpp"
#include "qvarsched/optimizer.hpp"
#include "qvarsched/problem_model.hpp"
#include "qvarsched/simulator.hpp"

namespace qvarsched {

inline constexpr std::uint64_t kDefaultShots = 4096;

/// How the objective is estimated during optimisation.
struct EvaluationMode {
    enum class Kind { exact, sampled };
    Kind kind = Kind::exact;
    std::uint64_t shots = kDefaultShots; ///< sampled mode only

    static EvaluationMode exact() { return {Kind::exact, kDefaultShots}; }
    static EvaluationMode sampled(std::uint64_t shots) { return {Kind::sampled, shots}; }
    [[nodiscard]] std::string name() const { return kind == Kind::exact ? "exact" : "sampled"; }
};

struct VqaOptions {
    OptimizerConfig optimizer;
    EvaluationMode mode = EvaluationMode::exact();
    /// Shots drawn from the optimised state for the reported Counts.
    std::uint64_t final_shots = kDefaultShots;
    std::size_t max_qubits = kDefaultMaxQubits;
};

struct VqaResult {
    std::vector<double> best_parameters;
    double best_value = 0.0;
    /// Objective values of the selected restart, in evaluation order.
    std::vector<double> trace;
    std::size_t iterations = 0;
    /// Best value reached by every restart, in restart order.
    std::vector<double> restart_values;
    std::size_t total_evaluations = 0;
    Counts counts;
    double wall_ms = 0.0;
};

/// Deterministic 64-bit seed for sub-stream (stream, index) of a master
/// seed, via splitmix64 mixing.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                        std::uint64_t index = 0) noexcept;

/// Shot-estimated energy: mean of the diagonal over `shots` sampled outcomes.
[[nodiscard]] double sampled_energy(const StateVector &state, std::span<const double> diagonal,
                                    std::uint64_t shots, std::uint64_t seed);

/// Optimises an already-built circuit against a diagonal Hamiltonian.
/// Each restart r draws its initial point from seed (optimizer.seed, r); the
/// restart with the lowest best value wins, ties going to the lower index.
[[nodiscard]] VqaResult run_variational(const Circuit &circuit, std::span<const double> diagonal,
                                        const VqaOptions &options);

/// VQE with one of the A1..A4 ansatzes on the encoded problem.
[[nodiscard]] VqaResult run_vqe(const AssignmentProblem &problem, AnsatzKind ansatz,
                                const VqaOptions &options);

/// QAOA with `reps` cost/mixer rounds on the encoded problem.
[[nodiscard]] VqaResult run_qaoa(const AssignmentProblem &problem, std::size_t reps,
                                 const VqaOptions &options);

} // namespace qvarsched
