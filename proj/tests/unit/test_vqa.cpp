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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qvarsched/circuits.hpp"
#include "qvarsched/encoder.hpp"
#include "qvarsched/errors.hpp"
#include "qvarsched/vqa.hpp"
#include "test_support.hpp"

namespace qvarsched {
namespace {

using testing::reference_instance;

VqaOptions small_options(std::size_t budget, std::size_t restarts, std::uint64_t seed) {
    VqaOptions o;
    o.optimizer.max_iterations = budget;
    o.optimizer.restarts = restarts;
    o.optimizer.seed = seed;
    return o;
}

TEST(DeriveSeed, DistinctStreamsAndIndices) {
    EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 2, 4));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 3));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
}

TEST(Vqe, ResultContract) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const VqaResult r = run_vqe(p, AnsatzKind::a1(), small_options(80, 3, 5));
    EXPECT_EQ(r.restart_values.size(), 3U);
    EXPECT_EQ(r.trace.size(), r.iterations);
    EXPECT_LE(r.iterations, 80U);
    EXPECT_EQ(r.best_value, *std::min_element(r.trace.begin(), r.trace.end()));
    EXPECT_EQ(r.best_value, *std::min_element(r.restart_values.begin(), r.restart_values.end()));
    EXPECT_EQ(r.counts.shots, kDefaultShots);
    std::uint64_t total = 0;
    for (const auto &[bits, n] : r.counts.histogram) total += n;
    EXPECT_EQ(total, kDefaultShots);
    EXPECT_GE(r.wall_ms, 0.0);
    // Running minimum of the trace is what best_value reports.
    double running = r.trace.front();
    for (double v : r.trace) running = std::min(running, v);
    EXPECT_EQ(running, r.best_value);
}

TEST(Vqe, DeterministicForSeed) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const VqaResult a = run_vqe(p, AnsatzKind::a2(), small_options(60, 2, 11));
    const VqaResult b = run_vqe(p, AnsatzKind::a2(), small_options(60, 2, 11));
    EXPECT_EQ(a.best_parameters, b.best_parameters);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.counts, b.counts);
    const VqaResult c = run_vqe(p, AnsatzKind::a2(), small_options(60, 2, 12));
    EXPECT_NE(a.trace, c.trace);
}

TEST(Vqe, ClosedFormOptimumReachesMinusSix) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const auto layout = build_layout(p);
    const IsingModel m = encode(p, layout);
    const Circuit c = build_a1(p, layout);
    // Optimum 10100101: blocks pick n1, n1, n2; slack (b11, b21) = (0, 1).
    const double pi = std::numbers::pi;
    const std::vector<double> theta{0.0, 0.0, pi, 0.0, pi};
    EXPECT_NEAR(expectation_diagonal(run(c, theta), m), -6.0, 1e-9);
}

TEST(Vqe, ZeroInitialPointIsValidForEveryAnsatz) {
    const auto p = reference_instance(ProblemVariant::echl());
    for (const auto kind : {AnsatzKind::a1(), AnsatzKind::a2(), AnsatzKind::a3(), AnsatzKind::a4()}) {
        VqaOptions o = small_options(20, 1, 0);
        o.optimizer.initial_point = InitialPoint::zero;
        EXPECT_NO_THROW((void)run_vqe(p, kind, o)) << kind.name();
    }
}

TEST(Vqe, RejectsOversizedInstances) {
    const auto p = reference_instance(ProblemVariant::ecfl());
    VqaOptions o = small_options(10, 1, 0);
    o.max_qubits = 12;
    EXPECT_THROW((void)run_vqe(p, AnsatzKind::a1(), o), QubitCountExceeded);
}

TEST(Vqe, A4FindsFeasibleStatesOnReferenceInstance) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const VqaResult r = run_vqe(p, AnsatzKind::a4(), small_options(500, 4, 1));
    EXPECT_NEAR(r.best_value, -6.0, 1e-3);
}

TEST(Qaoa, ZeroGammaGivesModelConstant) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const IsingModel m = encode(p, build_layout(p));
    const Circuit c = build_qaoa(m, 2);
    for (double beta : {0.0, 0.4, 1.3}) {
        const std::vector<double> theta{0.0, beta, 0.0, -beta};
        EXPECT_NEAR(expectation_diagonal(run(c, theta), m), 55.5, 1e-9);
    }
}

TEST(Qaoa, OptimisesTwoParametersPerRep) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const VqaResult r = run_qaoa(p, 3, small_options(50, 1, 2));
    EXPECT_EQ(r.best_parameters.size(), 6U);
    EXPECT_LT(r.best_value, 55.5);
}

TEST(Sampled, EstimatorIsUnbiased) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const auto layout = build_layout(p);
    const IsingModel m = encode(p, layout);
    const auto diagonal = energy_diagonal(m);
    const Circuit c = build_a2(p, layout);
    std::vector<double> theta(c.parameter_count());
    for (std::size_t k = 0; k < theta.size(); ++k) theta[k] = 0.3 + 0.41 * static_cast<double>(k);
    const StateVector s = run(c, theta);
    const double exact = expectation_diagonal(s, diagonal);
    double variance = 0.0;
    for (std::size_t k = 0; k < diagonal.size(); ++k) {
        variance += std::norm(s.amplitudes()[k]) * (diagonal[k] - exact) * (diagonal[k] - exact);
    }
    constexpr int batches = 100;
    constexpr std::uint64_t shots = 256;
    double mean = 0.0;
    for (int b = 0; b < batches; ++b) {
        mean += sampled_energy(s, diagonal, shots, derive_seed(99, 0, b));
    }
    mean /= batches;
    const double sigma = std::sqrt(variance / (batches * shots));
    EXPECT_NEAR(mean, exact, 3 * sigma + 1e-12);
}

TEST(Sampled, ModeRunsAndIsDeterministic) {
    const auto p = reference_instance(ProblemVariant::eohl());
    VqaOptions o = small_options(40, 2, 4);
    o.mode = EvaluationMode::sampled(512);
    const VqaResult a = run_vqe(p, AnsatzKind::a4(), o);
    const VqaResult b = run_vqe(p, AnsatzKind::a4(), o);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.counts, b.counts);
}

} // namespace
} // namespace qvarsched
