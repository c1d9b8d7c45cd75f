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

#include "qvarsched/problem_model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "qvarsched/errors.hpp"

namespace qvarsched {

std::optional<ProblemVariant> ProblemVariant::from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "ECFL") return ecfl();
    if (upper == "EOFL") return eofl();
    if (upper == "ECHL") return echl();
    if (upper == "EOHL") return eohl();
    return std::nullopt;
}

std::string ProblemVariant::name() const {
    std::string s = cloud_allowed ? "EC" : "EO";
    s += high_load ? "HL" : "FL";
    return s;
}

AssignmentProblem::AssignmentProblem(ProblemVariant variant,
                                     std::vector<ProcessSpec> processes,
                                     std::vector<NodeSpec> nodes)
    : variant_(variant), processes_(std::move(processes)), nodes_(std::move(nodes)) {
    if (processes_.empty()) {
        throw InvalidProblem("a problem needs at least one process");
    }
    if (nodes_.empty()) {
        throw InvalidProblem("a problem needs at least one edge node");
    }
    for (std::size_t i = 0; i < processes_.size(); ++i) {
        const auto &p = processes_[i];
        const auto tag = "process " + std::to_string(i + 1);
        if (p.weight < 1) {
            throw InvalidProblem(tag + ": weight must be a positive integer");
        }
        if (p.values.size() != nodes_.size()) {
            throw InvalidProblem(tag + ": expected " + std::to_string(nodes_.size()) +
                                 " values, got " + std::to_string(p.values.size()));
        }
        for (const auto &v : p.values) {
            if (v < 0) {
                throw InvalidProblem(tag + ": values must be non-negative");
            }
        }
    }
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        const auto &n = nodes_[j];
        const auto tag = "node " + std::to_string(j + 1);
        if (n.capacity < 1) {
            throw InvalidProblem(tag + ": capacity must be a positive integer");
        }
        if (variant_.high_load) {
            if (n.threshold < 0 || n.threshold >= n.capacity) {
                throw InvalidProblem(tag + ": threshold must satisfy 0 <= T < B");
            }
        } else if (n.threshold != 0) {
            throw InvalidProblem(tag + ": threshold must be 0 for free-load variants");
        }
    }
}

std::int64_t AssignmentProblem::effective_capacity(std::size_t node) const {
    const auto &n = nodes_.at(node);
    return n.capacity - n.threshold;
}

std::size_t slack_bit_count(const NodeSpec &node, ProblemVariant variant) {
    const std::int64_t effective =
        variant.high_load ? node.capacity - node.threshold : node.capacity;
    // Smallest m with 2^m >= effective + 1.
    std::size_t m = 0;
    while ((std::int64_t{1} << m) < effective + 1) {
        ++m;
    }
    return m;
}

std::size_t qubit_count(const AssignmentProblem &problem) {
    std::size_t q = problem.process_count() * problem.options_per_process();
    for (const auto &node : problem.nodes()) {
        q += slack_bit_count(node, problem.variant());
    }
    return q;
}

VariableLayout::VariableLayout(const AssignmentProblem &problem)
    : cloud_allowed_(problem.variant().cloud_allowed) {
    const std::size_t n_nodes = problem.node_count();
    std::size_t qubit = 0;
    blocks_.resize(problem.process_count());
    for (std::size_t i = 0; i < problem.process_count(); ++i) {
        for (std::size_t j = 0; j < n_nodes; ++j) {
            variables_.push_back({VariableKind::assign, i, j, 0, qubit});
            blocks_[i].push_back(qubit++);
        }
        if (cloud_allowed_) {
            variables_.push_back({VariableKind::cloud_slack, i, 0, 0, qubit});
            blocks_[i].push_back(qubit++);
        }
    }
    slack_.resize(n_nodes);
    for (std::size_t j = 0; j < n_nodes; ++j) {
        const auto bits = slack_bit_count(problem.nodes()[j], problem.variant());
        for (std::size_t k = 0; k < bits; ++k) {
            variables_.push_back({VariableKind::node_slack, 0, j, k, qubit});
            slack_[j].push_back(qubit++);
        }
    }
}

std::optional<std::size_t> VariableLayout::cloud_qubit(std::size_t process) const {
    if (!cloud_allowed_) {
        return std::nullopt;
    }
    return blocks_.at(process).back();
}

std::vector<std::size_t> VariableLayout::all_slack_qubits() const {
    std::vector<std::size_t> out;
    for (const auto &reg : slack_) {
        out.insert(out.end(), reg.begin(), reg.end());
    }
    return out;
}

std::string VariableLayout::label(std::size_t qubit) const {
    const auto &v = variables_.at(qubit);
    switch (v.kind) {
    case VariableKind::assign:
        return "x" + std::to_string(v.process + 1) + std::to_string(v.node + 1);
    case VariableKind::cloud_slack:
        return "p" + std::to_string(v.process + 1);
    case VariableKind::node_slack:
        return "b" + std::to_string(v.node + 1) + std::to_string(v.bit + 1);
    }
    return {};
}

VariableLayout build_layout(const AssignmentProblem &problem) {
    return VariableLayout(problem);
}

bool Assignment::structurally_consistent() const noexcept {
    return std::none_of(targets.begin(), targets.end(), [](const ProcessTarget &t) {
        return t.kind == TargetKind::inconsistent;
    });
}

Assignment decode(const AssignmentProblem &problem, const VariableLayout &layout,
                  const Bitstring &bits) {
    if (bits.size() != layout.qubit_count()) {
        throw MalformedBitstring(layout.qubit_count(), bits.size());
    }
    const std::size_t n_nodes = problem.node_count();
    Assignment out;
    out.loads.assign(n_nodes, 0);
    out.targets.reserve(problem.process_count());
    for (std::size_t i = 0; i < problem.process_count(); ++i) {
        std::size_t ones = 0;
        std::size_t chosen = 0;
        for (std::size_t j = 0; j < n_nodes; ++j) {
            if (bits[layout.assign_qubit(i, j)]) {
                ++ones;
                chosen = j;
                out.loads[j] += problem.processes()[i].weight;
            }
        }
        const auto cloud = layout.cloud_qubit(i);
        const bool cloud_bit = cloud && bits[*cloud];
        if (ones == 1 && !cloud_bit) {
            out.targets.push_back(ProcessTarget::edge(chosen));
        } else if (ones == 0 && cloud_bit) {
            out.targets.push_back(ProcessTarget::cloud());
        } else {
            out.targets.push_back({TargetKind::inconsistent, 0});
        }
    }
    out.residuals.resize(n_nodes);
    out.slack_values.resize(n_nodes);
    for (std::size_t j = 0; j < n_nodes; ++j) {
        out.residuals[j] = problem.nodes()[j].capacity - out.loads[j];
        std::int64_t value = 0;
        const auto reg = layout.slack_register(j);
        for (std::size_t k = 0; k < reg.size(); ++k) {
            if (bits[reg[k]]) {
                value += std::int64_t{1} << k;
            }
        }
        out.slack_values[j] = value;
    }
    return out;
}

Bitstring encode_assignment(const AssignmentProblem &problem, const VariableLayout &layout,
                            std::span<const ProcessTarget> targets) {
    if (targets.size() != problem.process_count()) {
        throw std::invalid_argument("one target per process is required");
    }
    Bitstring bits(layout.qubit_count());
    std::vector<std::int64_t> loads(problem.node_count(), 0);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto &t = targets[i];
        switch (t.kind) {
        case TargetKind::edge:
            if (t.node >= problem.node_count()) {
                throw std::invalid_argument("target node out of range");
            }
            bits.set(layout.assign_qubit(i, t.node), true);
            loads[t.node] += problem.processes()[i].weight;
            break;
        case TargetKind::cloud:
            if (!layout.cloud_allowed()) {
                throw std::invalid_argument("cloud target in an edge-only problem");
            }
            bits.set(*layout.cloud_qubit(i), true);
            break;
        case TargetKind::inconsistent:
            throw std::invalid_argument("cannot encode an inconsistent target");
        }
    }
    for (std::size_t j = 0; j < problem.node_count(); ++j) {
        const std::int64_t residual = problem.nodes()[j].capacity - loads[j];
        const auto reg = layout.slack_register(j);
        if (residual < 0 || residual >= (std::int64_t{1} << reg.size())) {
            throw std::invalid_argument("residual of node " + std::to_string(j + 1) +
                                        " does not fit its slack register");
        }
        for (std::size_t k = 0; k < reg.size(); ++k) {
            bits.set(reg[k], ((residual >> k) & 1) != 0);
        }
    }
    return bits;
}

std::string Violation::describe() const {
    if (kind == ConstraintKind::process_assignment) {
        return "process " + std::to_string(index + 1) + ": assignment sum " +
               std::to_string(lhs) + " != " + std::to_string(rhs);
    }
    return "node " + std::to_string(index + 1) + ": load + slack " + std::to_string(lhs) +
           " != capacity " + std::to_string(rhs);
}

FeasibilityReport check_feasible(const AssignmentProblem &problem,
                                 const VariableLayout &layout, const Bitstring &bits) {
    const Assignment a = decode(problem, layout, bits);
    FeasibilityReport report;
    for (std::size_t i = 0; i < problem.process_count(); ++i) {
        std::int64_t sum = 0;
        for (auto q : layout.process_block(i)) {
            sum += bits[q] ? 1 : 0;
        }
        if (sum != 1) {
            report.violations.push_back({ConstraintKind::process_assignment, i, sum, 1});
        }
    }
    for (std::size_t j = 0; j < problem.node_count(); ++j) {
        const auto &node = problem.nodes()[j];
        const std::int64_t lhs = a.loads[j] + a.slack_values[j];
        if (lhs != node.capacity) {
            report.violations.push_back({ConstraintKind::node_capacity, j, lhs, node.capacity});
        } else if (a.loads[j] < node.threshold) {
            report.below_threshold.push_back(j);
        }
    }
    report.feasible = report.violations.empty();
    return report;
}

Rational gain(const AssignmentProblem &problem, const Assignment &assignment) {
    Rational total = 0;
    for (std::size_t i = 0; i < assignment.targets.size(); ++i) {
        const auto &t = assignment.targets[i];
        if (t.kind == TargetKind::inconsistent) {
            throw std::invalid_argument("gain of an inconsistent assignment");
        }
        if (t.kind == TargetKind::edge) {
            total += problem.processes().at(i).values.at(t.node);
        }
    }
    return total;
}

FeasibilityMask::FeasibilityMask(const AssignmentProblem &problem,
                                 const VariableLayout &layout)
    : qubits_(layout.qubit_count()) {
    auto bit = [&](std::size_t qubit) { return std::uint64_t{1} << (qubits_ - 1 - qubit); };
    for (std::size_t i = 0; i < problem.process_count(); ++i) {
        Equality eq{{}, 1};
        for (auto q : layout.process_block(i)) {
            eq.terms.push_back({bit(q), 1});
        }
        equalities_.push_back(std::move(eq));
    }
    for (std::size_t j = 0; j < problem.node_count(); ++j) {
        Equality eq{{}, problem.nodes()[j].capacity};
        for (std::size_t i = 0; i < problem.process_count(); ++i) {
            eq.terms.push_back({bit(layout.assign_qubit(i, j)), problem.processes()[i].weight});
        }
        const auto reg = layout.slack_register(j);
        for (std::size_t k = 0; k < reg.size(); ++k) {
            eq.terms.push_back({bit(reg[k]), std::int64_t{1} << k});
        }
        equalities_.push_back(std::move(eq));
    }
}

bool FeasibilityMask::feasible(std::uint64_t index) const noexcept {
    for (const auto &eq : equalities_) {
        std::int64_t lhs = 0;
        for (const auto &t : eq.terms) {
            if ((index & t.mask) != 0) {
                lhs += t.coefficient;
            }
        }
        if (lhs != eq.rhs) {
            return false;
        }
    }
    return true;
}

} // namespace qvarsched
