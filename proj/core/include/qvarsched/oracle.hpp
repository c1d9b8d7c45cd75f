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
#include <span>
#include <vector>

#include "qvarsched/bitstring.hpp"
#include "qvarsched/circuit.hpp"
#include "qvarsched/problem_model.hpp"
#include "qvarsched/rational.hpp"
#include "qvarsched/simulator.hpp"

namespace qvarsched {

/// Exact ground truth for one instance.
struct OracleReport {
    std::size_t qubit_count = 0;
    Rational optimal_gain = 0;
    /// Every feasible bitstring attaining the optimal gain, sorted.
    std::vector<Bitstring> optimal;
    std::uint64_t best_count = 0;     ///< N_best
    std::uint64_t feasible_count = 0; ///< N_feas
    std::uint64_t total = 0;          ///< 2^Q
    bool infeasible_instance = false;

    friend bool operator==(const OracleReport &, const OracleReport &) = default;
};

/// Exhaustive scan of all 2^Q bitstrings. Throws QubitCountExceeded when
/// Q > max_qubits.
[[nodiscard]] OracleReport enumerate(const AssignmentProblem &problem,
                                     const VariableLayout &layout,
                                     std::size_t max_qubits = kDefaultMaxQubits);

/// Same report obtained by iterating the (N + c)^P assignments and deriving
/// the slack bits, so it scales with the assignment space instead of 2^Q.
[[nodiscard]] OracleReport enumerate_structured(const AssignmentProblem &problem,
                                                const VariableLayout &layout);

inline constexpr std::size_t kDenseMaxQubits = 6;

/// Reference evolution by explicit 2^n x 2^n matrix products, built from
/// Kronecker products and basis permutations without the simulator's
/// kernels. Throws QubitCountExceeded above kDenseMaxQubits.
[[nodiscard]] StateVector dense_state(const Circuit &circuit, std::span<const double> parameters);

} // namespace qvarsched
