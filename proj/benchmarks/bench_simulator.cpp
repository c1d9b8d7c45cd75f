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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qvarsched/circuits.hpp"
#include "qvarsched/metrics_bench.hpp"
#include "qvarsched/simulator.hpp"

namespace {

using namespace qvarsched;

void BM_RunAnsatz(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::echl(), static_cast<std::size_t>(state.range(0)));
    const VariableLayout layout(problem);
    const auto model = encode(problem, layout);
    const auto circuit = build_circuit(AnsatzKind::a1(), problem, layout, model);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-3.14, 3.14);
    std::vector<double> params(circuit.parameter_count());
    for (auto &p : params) p = angle(rng);
    for (auto _ : state) {
        auto psi = run(circuit, params);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.counters["qubits"] = static_cast<double>(layout.qubit_count());
}
BENCHMARK(BM_RunAnsatz)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Qaoa(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::eohl(), 3);
    const VariableLayout layout(problem);
    const auto model = encode(problem, layout);
    const auto circuit = build_circuit(AnsatzKind::qaoa(static_cast<std::size_t>(state.range(0))),
                                       problem, layout, model);
    const std::vector<double> params(circuit.parameter_count(), 0.3);
    for (auto _ : state) {
        auto psi = run(circuit, params);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
}
BENCHMARK(BM_Qaoa)->Arg(1)->Arg(3)->Arg(5);

void BM_ExpectationDiagonal(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::echl(), static_cast<std::size_t>(state.range(0)));
    const VariableLayout layout(problem);
    const auto diagonal = energy_diagonal(encode(problem, layout));
    const auto circuit = build_circuit(AnsatzKind::a1(), problem, layout, encode(problem, layout));
    const std::vector<double> params(circuit.parameter_count(), 0.7);
    const auto psi = run(circuit, params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation_diagonal(psi, diagonal));
    }
}
BENCHMARK(BM_ExpectationDiagonal)->DenseRange(3, 6);

void BM_Sample(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::echl(), 4);
    const VariableLayout layout(problem);
    const auto circuit = build_circuit(AnsatzKind::a1(), problem, layout, encode(problem, layout));
    const std::vector<double> params(circuit.parameter_count(), 0.7);
    const auto psi = run(circuit, params);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(psi, static_cast<std::uint64_t>(state.range(0)), ++seed));
    }
}
BENCHMARK(BM_Sample)->Arg(1024)->Arg(8192);

} // namespace

BENCHMARK_MAIN();
