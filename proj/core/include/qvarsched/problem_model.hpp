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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qvarsched/bitstring.hpp"
#include "qvarsched/rational.hpp"

namespace qvarsched {

/// The four Edge/Cloud assignment variants.
///   ECFL: cloud + free load     EOFL: edge only + free load
///   ECHL: cloud + high load     EOHL: edge only + high load
struct ProblemVariant {
    bool cloud_allowed = false;
    bool high_load = false;

    static constexpr ProblemVariant ecfl() { return {true, false}; }
    static constexpr ProblemVariant eofl() { return {false, false}; }
    static constexpr ProblemVariant echl() { return {true, true}; }
    static constexpr ProblemVariant eohl() { return {false, true}; }

    /// Accepts the acronyms case-insensitively.
    [[nodiscard]] static std::optional<ProblemVariant> from_name(std::string_view name);
    [[nodiscard]] std::string name() const;

    friend bool operator==(ProblemVariant, ProblemVariant) = default;
};

struct ProcessSpec {
    std::int64_t weight = 1;
    /// Gain of running the process on edge node j, relative to the Cloud.
    std::vector<Rational> values;
};

struct NodeSpec {
    std::int64_t capacity = 1;
    /// Minimum load; must be 0 for free-load variants.
    std::int64_t threshold = 0;
};

/// A validated ILP instance. Construction throws InvalidProblem when an
/// invariant does not hold; the object is immutable afterwards.
class AssignmentProblem {
  public:
    AssignmentProblem(ProblemVariant variant, std::vector<ProcessSpec> processes,
                      std::vector<NodeSpec> nodes);

    [[nodiscard]] ProblemVariant variant() const noexcept { return variant_; }
    [[nodiscard]] const std::vector<ProcessSpec> &processes() const noexcept {
        return processes_;
    }
    [[nodiscard]] const std::vector<NodeSpec> &nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t process_count() const noexcept { return processes_.size(); }
    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }

    /// B̂_j = B_j - T_j (equals B_j for free-load variants).
    [[nodiscard]] std::int64_t effective_capacity(std::size_t node) const;
    /// Options per process: N edge nodes, plus the Cloud when allowed.
    [[nodiscard]] std::size_t options_per_process() const noexcept {
        return nodes_.size() + (variant_.cloud_allowed ? 1 : 0);
    }

  private:
    ProblemVariant variant_;
    std::vector<ProcessSpec> processes_;
    std::vector<NodeSpec> nodes_;
};

/// ceil(log2(B̂ + 1)): bits needed for a residual in [0, B̂].
[[nodiscard]] std::size_t slack_bit_count(const NodeSpec &node, ProblemVariant variant);

[[nodiscard]] std::size_t qubit_count(const AssignmentProblem &problem);

enum class VariableKind { assign, cloud_slack, node_slack };

struct Variable {
    VariableKind kind = VariableKind::assign;
    std::size_t process = 0; ///< meaningful for assign / cloud_slack
    std::size_t node = 0;    ///< meaningful for assign / node_slack
    std::size_t bit = 0;     ///< slack bit k (0 = least significant)
    std::size_t qubit = 0;
};

/// Canonical variable-to-qubit map: per-process blocks (x_i1..x_iN, p_i)
/// followed by one little-endian slack register per node.
class VariableLayout {
  public:
    VariableLayout() = default;
    explicit VariableLayout(const AssignmentProblem &problem);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return variables_.size(); }
    [[nodiscard]] const std::vector<Variable> &variables() const noexcept {
        return variables_;
    }
    [[nodiscard]] const Variable &variable(std::size_t qubit) const {
        return variables_.at(qubit);
    }

    [[nodiscard]] std::size_t process_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] std::size_t node_count() const noexcept { return slack_.size(); }
    [[nodiscard]] bool cloud_allowed() const noexcept { return cloud_allowed_; }

    [[nodiscard]] std::size_t assign_qubit(std::size_t process, std::size_t node) const {
        return blocks_.at(process).at(node);
    }
    [[nodiscard]] std::optional<std::size_t> cloud_qubit(std::size_t process) const;
    /// All qubits of a process block in circuit order (x_i1..x_iN[, p_i]).
    [[nodiscard]] std::span<const std::size_t> process_block(std::size_t process) const {
        return blocks_.at(process);
    }
    /// Slack register of a node, least significant bit first.
    [[nodiscard]] std::span<const std::size_t> slack_register(std::size_t node) const {
        return slack_.at(node);
    }
    /// All slack qubits of every node, in layout order.
    [[nodiscard]] std::vector<std::size_t> all_slack_qubits() const;

    /// 1-based label such as "x12", "p3" or "b21".
    [[nodiscard]] std::string label(std::size_t qubit) const;

  private:
    std::vector<Variable> variables_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::vector<std::size_t>> slack_;
    bool cloud_allowed_ = false;
};

[[nodiscard]] VariableLayout build_layout(const AssignmentProblem &problem);

enum class TargetKind { edge, cloud, inconsistent };

struct ProcessTarget {
    TargetKind kind = TargetKind::inconsistent;
    std::size_t node = 0; ///< valid when kind == edge

    static constexpr ProcessTarget edge(std::size_t node) { return {TargetKind::edge, node}; }
    static constexpr ProcessTarget cloud() { return {TargetKind::cloud, 0}; }

    friend bool operator==(const ProcessTarget &, const ProcessTarget &) = default;
};

/// Decoded view of a bitstring. Loads are computed from the raw x bits,
/// so they are meaningful even for inconsistent strings.
struct Assignment {
    std::vector<ProcessTarget> targets;
    std::vector<std::int64_t> loads;        ///< L_j
    std::vector<std::int64_t> residuals;    ///< r_j = B_j - L_j
    std::vector<std::int64_t> slack_values; ///< binary value of each slack register

    [[nodiscard]] bool structurally_consistent() const noexcept;

    friend bool operator==(const Assignment &, const Assignment &) = default;
};

[[nodiscard]] Assignment decode(const AssignmentProblem &problem,
                                const VariableLayout &layout, const Bitstring &bits);

/// Inverse of decode for consistent assignments: the slack registers are
/// set to the residuals. Throws std::invalid_argument when a target is
/// inconsistent or a residual does not fit its register.
[[nodiscard]] Bitstring encode_assignment(const AssignmentProblem &problem,
                                          const VariableLayout &layout,
                                          std::span<const ProcessTarget> targets);

enum class ConstraintKind { process_assignment, node_capacity };

struct Violation {
    ConstraintKind kind = ConstraintKind::process_assignment;
    std::size_t index = 0;  ///< process or node
    std::int64_t lhs = 0;   ///< evaluated left-hand side of the equality
    std::int64_t rhs = 0;

    [[nodiscard]] std::string describe() const;
    friend bool operator==(const Violation &, const Violation &) = default;
};

struct FeasibilityReport {
    bool feasible = false;
    std::vector<Violation> violations;
    /// Nodes whose equality holds but whose load is below T_j. This happens
    /// only under high load when 2^m_j - 1 > B̂_j (the register can store a
    /// residual larger than B̂_j); it is reported, not treated as a violation.
    std::vector<std::size_t> below_threshold;
};

/// Checks every per-process one-hot equality and every node equality
/// sum_i w_i x_ij + sum_k 2^k b_jk = B_j.
[[nodiscard]] FeasibilityReport check_feasible(const AssignmentProblem &problem,
                                               const VariableLayout &layout,
                                               const Bitstring &bits);

/// Sum of v_ij over edge-assigned processes. Throws std::invalid_argument
/// for an inconsistent assignment.
[[nodiscard]] Rational gain(const AssignmentProblem &problem, const Assignment &assignment);

/// Allocation-free feasibility test on basis indices, used by exhaustive
/// scans. Agrees with check_feasible(...).feasible.
class FeasibilityMask {
  public:
    FeasibilityMask(const AssignmentProblem &problem, const VariableLayout &layout);

    [[nodiscard]] bool feasible(std::uint64_t index) const noexcept;
    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubits_; }

  private:
    struct Term {
        std::uint64_t mask;
        std::int64_t coefficient;
    };
    struct Equality {
        std::vector<Term> terms;
        std::int64_t rhs;
    };
    std::size_t qubits_ = 0;
    std::vector<Equality> equalities_;
};

} // namespace qvarsched
