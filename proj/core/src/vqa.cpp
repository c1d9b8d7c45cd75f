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

#include "qvarsched/vqa.hpp"

#include <chrono>
#include <numbers>
#include <random>

#include "parallel.hpp"
#include "qvarsched/errors.hpp"

namespace qvarsched {
namespace {

constexpr std::uint64_t kInitialPointStream = 1;
constexpr std::uint64_t kSamplingStream = 2;
constexpr std::uint64_t kFinalCountsStream = 3;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

std::vector<double> initial_point(std::size_t dimension, const OptimizerConfig &config,
                                  std::size_t restart) {
    std::vector<double> x(dimension, 0.0);
    if (config.initial_point == InitialPoint::zero) {
        return x;
    }
    std::mt19937_64 rng(derive_seed(config.seed, kInitialPointStream, restart));
    for (auto &v : x) {
        v = static_cast<double>(rng() >> 11U) * 0x1.0p-53 * std::numbers::pi;
    }
    return x;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                          std::uint64_t index) noexcept {
    return splitmix64(splitmix64(splitmix64(base) ^ stream) ^ index);
}

double sampled_energy(const StateVector &state, std::span<const double> diagonal,
                      std::uint64_t shots, std::uint64_t seed) {
    const Counts counts = sample(state, shots, seed);
    double total = 0.0;
    for (const auto &[bits, n] : counts.histogram) {
        total += diagonal[bits.to_index()] * static_cast<double>(n);
    }
    return total / static_cast<double>(shots);
}

VqaResult run_variational(const Circuit &circuit, std::span<const double> diagonal,
                          const VqaOptions &options) {
    options.optimizer.validate();
    const auto started = std::chrono::steady_clock::now();
    const std::size_t restarts = options.optimizer.restarts;
    std::vector<MinimizeResult> runs(restarts);

    detail::parallel_for(restarts, [&](std::size_t r) {
        std::uint64_t evaluation = 0;
        const std::uint64_t sampling_seed =
            derive_seed(options.optimizer.seed, kSamplingStream, r);
        Objective objective = [&](std::span<const double> theta) {
            const StateVector state = run(circuit, theta, options.max_qubits);
            if (options.mode.kind == EvaluationMode::Kind::exact) {
                return expectation_diagonal(state, diagonal);
            }
            return sampled_energy(state, diagonal, options.mode.shots,
                                  derive_seed(sampling_seed, evaluation++));
        };
        runs[r] = minimize(objective, initial_point(circuit.parameter_count(), options.optimizer, r),
                           options.optimizer);
    });

    VqaResult result;
    std::size_t chosen = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        result.restart_values.push_back(runs[r].value);
        result.total_evaluations += runs[r].evaluations;
        if (runs[r].value < runs[chosen].value) {
            chosen = r;
        }
    }
    result.best_parameters = runs[chosen].parameters;
    result.best_value = runs[chosen].value;
    result.trace = std::move(runs[chosen].trace);
    result.iterations = runs[chosen].evaluations;

    const StateVector final_state = run(circuit, result.best_parameters, options.max_qubits);
    result.counts = sample(final_state, options.final_shots,
                           derive_seed(options.optimizer.seed, kFinalCountsStream));
    result.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return result;
}

VqaResult run_vqe(const AssignmentProblem &problem, AnsatzKind ansatz, const VqaOptions &options) {
    const auto started = std::chrono::steady_clock::now();
    const VariableLayout layout = build_layout(problem);
    if (layout.qubit_count() > options.max_qubits) {
        throw QubitCountExceeded(layout.qubit_count(), options.max_qubits);
    }
    const IsingModel model = encode(problem, layout);
    const Circuit circuit = build_circuit(ansatz, problem, layout, model);
    const auto diagonal = energy_diagonal(model);
    VqaResult result = run_variational(circuit, diagonal, options);
    result.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return result;
}

VqaResult run_qaoa(const AssignmentProblem &problem, std::size_t reps, const VqaOptions &options) {
    return run_vqe(problem, AnsatzKind::qaoa(reps), options);
}

} // namespace qvarsched
