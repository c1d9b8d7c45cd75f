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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvarsched/circuit.hpp"
#include "qvarsched/encoder.hpp"
#include "qvarsched/problem_model.hpp"

namespace qvarsched {

/// A1..A4 are the constraint-aware VQE ansatzes; qaoa carries its depth.
struct AnsatzKind {
    enum class Family { a1, a2, a3, a4, qaoa };
    Family family = Family::a1;
    std::size_t reps = 1; ///< QAOA only, >= 1

    static AnsatzKind a1() { return {Family::a1, 1}; }
    static AnsatzKind a2() { return {Family::a2, 1}; }
    static AnsatzKind a3() { return {Family::a3, 1}; }
    static AnsatzKind a4() { return {Family::a4, 1}; }
    static AnsatzKind qaoa(std::size_t reps) { return {Family::qaoa, reps}; }

    /// "A1".."A4", "QAOA" with reps supplied separately, or "QAOA-<reps>"
    /// as produced by name().
    [[nodiscard]] static std::optional<AnsatzKind> from_name(std::string_view name,
                                                             std::size_t reps = 1);
    [[nodiscard]] std::string name() const;

    friend bool operator==(const AnsatzKind &, const AnsatzKind &) = default;
};

/// Number of rotation + entangling repetitions in the slack two-local block
/// of A2 / A3.
inline constexpr std::size_t kTwoLocalReps = 2;

/// One-hot blocks per process and an independent RY on every slack qubit.
[[nodiscard]] Circuit build_a1(const AssignmentProblem &problem, const VariableLayout &layout);
/// A1 blocks; slack qubits prepared by a two-local circuit (RY layers and
/// ring-connected CNOT layers) spanning every slack qubit.
[[nodiscard]] Circuit build_a2(const AssignmentProblem &problem, const VariableLayout &layout);
/// As A2, but entanglers stay inside each node's slack register.
[[nodiscard]] Circuit build_a3(const AssignmentProblem &problem, const VariableLayout &layout);
/// A1 blocks; slack registers loaded with B_j then, for every (i, j),
/// w_i is subtracted from register j controlled on x_ij.
[[nodiscard]] Circuit build_a4(const AssignmentProblem &problem, const VariableLayout &layout);
/// H layer, then `reps` rounds of cost layer RZ(2 gamma h_i), RZZ(2 gamma J_ij)
/// and mixer RX(2 beta). Parameters are ordered gamma_1, beta_1, gamma_2, ...
/// Throws std::invalid_argument when reps == 0.
[[nodiscard]] Circuit build_qaoa(const IsingModel &model, std::size_t reps);

/// Dispatches on kind; the model is only consulted for QAOA.
[[nodiscard]] Circuit build_circuit(AnsatzKind kind, const AssignmentProblem &problem,
                                    const VariableLayout &layout, const IsingModel &model);

struct CircuitMetrics {
    std::size_t parameters = 0;      ///< Θ
    std::size_t two_qubit_gates = 0; ///< G₂
    std::size_t two_qubit_depth = 0; ///< D₂

    friend bool operator==(const CircuitMetrics &, const CircuitMetrics &) = default;
};

/// Two-qubit gate accounting for an MCX with k controls. One control is a
/// CNOT; two is the 6-CNOT Toffoli; k >= 3 follows the linear-depth,
/// quadratic-count construction: 2k^2 - 2 gates in depth 4k - 2.
[[nodiscard]] std::size_t mcx_two_qubit_cost(std::size_t controls) noexcept;
[[nodiscard]] std::size_t mcx_two_qubit_depth(std::size_t controls) noexcept;

/// Ripple decrement realisation of a csub gate: for each set bit t of the
/// constant, bit q >= t flips when every register bit in [t, q) is 0,
/// emitted from the top bit down as X-conjugated MCX gates.
[[nodiscard]] std::vector<Gate> decompose_csub(const Gate &csub);

/// Θ, G₂ and D₂. csub gates are counted through decompose_csub; D₂ uses
/// greedy as-soon-as-possible layering where every two-qubit block blocks
/// all of its operands for its depth.
[[nodiscard]] CircuitMetrics metrics(const Circuit &circuit);

} // namespace qvarsched
