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

#include "qvarsched/encoder.hpp"
#include "qvarsched/metrics_bench.hpp"
#include "qvarsched/oracle.hpp"

namespace {

using namespace qvarsched;

void BM_Encode(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::ecfl(), static_cast<std::size_t>(state.range(0)));
    const VariableLayout layout(problem);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(problem, layout));
    }
}
BENCHMARK(BM_Encode)->DenseRange(3, 6);

void BM_EnergyDiagonal(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::echl(), static_cast<std::size_t>(state.range(0)));
    const VariableLayout layout(problem);
    const auto model = encode(problem, layout);
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy_diagonal(model));
    }
}
BENCHMARK(BM_EnergyDiagonal)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateFull(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::echl(), static_cast<std::size_t>(state.range(0)));
    const VariableLayout layout(problem);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate(problem, layout));
    }
}
BENCHMARK(BM_EnumerateFull)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateStructured(benchmark::State &state) {
    const auto problem = make_family_instance(ProblemVariant::echl(), static_cast<std::size_t>(state.range(0)));
    const VariableLayout layout(problem);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_structured(problem, layout));
    }
}
BENCHMARK(BM_EnumerateStructured)->DenseRange(3, 7);

} // namespace
