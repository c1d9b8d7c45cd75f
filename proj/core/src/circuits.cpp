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

#include "qvarsched/circuits.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace qvarsched {
namespace {

std::size_t new_theta(Circuit &c) {
    return c.add_parameter("theta_" + std::to_string(c.parameter_count() + 1));
}

/// X on the first qubit, a CRY chain moving the excitation down the block,
/// then a CNOT chain that clears every qubit but the last excited one.
void append_one_hot_block(Circuit &c, std::span<const std::size_t> block) {
    if (block.empty()) {
        return;
    }
    c.append(Gate::x(block[0]));
    for (std::size_t k = 0; k + 1 < block.size(); ++k) {
        c.append(Gate::cry(block[k], block[k + 1], Angle::bound(new_theta(c))));
    }
    for (std::size_t k = 0; k + 1 < block.size(); ++k) {
        c.append(Gate::cnot(block[k + 1], block[k]));
    }
}

void append_assignment_blocks(Circuit &c, const VariableLayout &layout) {
    for (std::size_t i = 0; i < layout.process_count(); ++i) {
        append_one_hot_block(c, layout.process_block(i));
    }
}

void append_ry_layer(Circuit &c, std::span<const std::size_t> qubits) {
    for (auto q : qubits) {
        c.append(Gate::ry(q, Angle::bound(new_theta(c))));
    }
}

/// Ring of CNOTs in brickwork order: even pairs, odd pairs, then the
/// closing pair. Two qubits give the pair in both directions.
void append_ring(Circuit &c, std::span<const std::size_t> qubits) {
    const std::size_t n = qubits.size();
    if (n < 2) {
        return;
    }
    if (n == 2) {
        c.append(Gate::cnot(qubits[0], qubits[1]));
        c.append(Gate::cnot(qubits[1], qubits[0]));
        return;
    }
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        c.append(Gate::cnot(qubits[k], qubits[k + 1]));
    }
    for (std::size_t k = 1; k + 1 < n; k += 2) {
        c.append(Gate::cnot(qubits[k], qubits[k + 1]));
    }
    c.append(Gate::cnot(qubits[n - 1], qubits[0]));
}

void append_linear(Circuit &c, std::span<const std::size_t> qubits) {
    for (std::size_t k = 0; k + 1 < qubits.size(); ++k) {
        c.append(Gate::cnot(qubits[k], qubits[k + 1]));
    }
}

} // namespace

std::optional<AnsatzKind> AnsatzKind::from_name(std::string_view name, std::size_t reps) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (upper == "A1") return a1();
    if (upper == "A2") return a2();
    if (upper == "A3") return a3();
    if (upper == "A4") return a4();
    if (upper == "QAOA" && reps >= 1) return qaoa(reps);
    if (upper.starts_with("QAOA-") && upper.size() > 5 &&
        std::all_of(upper.begin() + 5, upper.end(),
                    [](unsigned char ch) { return std::isdigit(ch) != 0; }) &&
        upper.size() < 12) {
        const auto depth = std::stoul(upper.substr(5));
        if (depth >= 1) return qaoa(depth);
    }
    return std::nullopt;
}

std::string AnsatzKind::name() const {
    switch (family) {
    case Family::a1: return "A1";
    case Family::a2: return "A2";
    case Family::a3: return "A3";
    case Family::a4: return "A4";
    case Family::qaoa: return "QAOA-" + std::to_string(reps);
    }
    return "?";
}

Circuit build_a1(const AssignmentProblem &, const VariableLayout &layout) {
    Circuit c(layout.qubit_count());
    append_assignment_blocks(c, layout);
    const auto slack = layout.all_slack_qubits();
    append_ry_layer(c, slack);
    return c;
}

Circuit build_a2(const AssignmentProblem &, const VariableLayout &layout) {
    Circuit c(layout.qubit_count());
    append_assignment_blocks(c, layout);
    const auto slack = layout.all_slack_qubits();
    for (std::size_t r = 0; r < kTwoLocalReps; ++r) {
        append_ry_layer(c, slack);
        append_ring(c, slack);
    }
    return c;
}

Circuit build_a3(const AssignmentProblem &, const VariableLayout &layout) {
    Circuit c(layout.qubit_count());
    append_assignment_blocks(c, layout);
    const auto slack = layout.all_slack_qubits();
    for (std::size_t r = 0; r < kTwoLocalReps; ++r) {
        append_ry_layer(c, slack);
        for (std::size_t j = 0; j < layout.node_count(); ++j) {
            append_linear(c, layout.slack_register(j));
        }
    }
    return c;
}

Circuit build_a4(const AssignmentProblem &problem, const VariableLayout &layout) {
    Circuit c(layout.qubit_count());
    append_assignment_blocks(c, layout);
    for (std::size_t j = 0; j < problem.node_count(); ++j) {
        const auto reg = layout.slack_register(j);
        const auto capacity = static_cast<std::uint64_t>(problem.nodes()[j].capacity);
        for (std::size_t k = 0; k < reg.size(); ++k) {
            if (((capacity >> k) & 1U) != 0) {
                c.append(Gate::x(reg[k]));
            }
        }
    }
    for (std::size_t i = 0; i < problem.process_count(); ++i) {
        const auto weight = static_cast<std::uint64_t>(problem.processes()[i].weight);
        for (std::size_t j = 0; j < problem.node_count(); ++j) {
            const auto reg = layout.slack_register(j);
            if (reg.empty()) {
                continue;
            }
            Gate g = Gate::csub(layout.assign_qubit(i, j), {reg.begin(), reg.end()}, weight);
            if (g.constant != 0) {
                c.append(std::move(g));
            }
        }
    }
    return c;
}

Circuit build_qaoa(const IsingModel &model, std::size_t reps) {
    if (reps == 0) {
        throw std::invalid_argument("QAOA needs at least one repetition");
    }
    Circuit c(model.qubit_count);
    for (std::size_t q = 0; q < model.qubit_count; ++q) {
        c.append(Gate::h(q));
    }
    for (std::size_t r = 1; r <= reps; ++r) {
        const auto gamma = c.add_parameter("gamma_" + std::to_string(r));
        const auto beta = c.add_parameter("beta_" + std::to_string(r));
        for (std::size_t q = 0; q < model.qubit_count; ++q) {
            if (model.linear[q] != 0) {
                c.append(Gate::rz(q, Angle::bound(gamma, 2.0 * to_double(model.linear[q]))));
            }
        }
        for (const auto &[key, coefficient] : model.pairwise) {
            c.append(Gate::rzz(key.first, key.second,
                               Angle::bound(gamma, 2.0 * to_double(coefficient))));
        }
        for (std::size_t q = 0; q < model.qubit_count; ++q) {
            c.append(Gate::rx(q, Angle::bound(beta, 2.0)));
        }
    }
    return c;
}

Circuit build_circuit(AnsatzKind kind, const AssignmentProblem &problem,
                      const VariableLayout &layout, const IsingModel &model) {
    switch (kind.family) {
    case AnsatzKind::Family::a1: return build_a1(problem, layout);
    case AnsatzKind::Family::a2: return build_a2(problem, layout);
    case AnsatzKind::Family::a3: return build_a3(problem, layout);
    case AnsatzKind::Family::a4: return build_a4(problem, layout);
    case AnsatzKind::Family::qaoa: return build_qaoa(model, kind.reps);
    }
    throw std::invalid_argument("unknown ansatz");
}

std::size_t mcx_two_qubit_cost(std::size_t controls) noexcept {
    if (controls == 0) return 0;
    if (controls == 1) return 1;
    return 2 * controls * controls - 2;
}

std::size_t mcx_two_qubit_depth(std::size_t controls) noexcept {
    if (controls == 0) return 0;
    if (controls == 1) return 1;
    return 4 * controls - 2;
}

std::vector<Gate> decompose_csub(const Gate &csub) {
    if (csub.kind != GateKind::csub) {
        throw std::invalid_argument("decompose_csub expects a csub gate");
    }
    const std::size_t control = csub.qubits[0];
    const std::span<const std::size_t> reg = std::span(csub.qubits).subspan(1);
    std::vector<Gate> out;
    for (std::size_t t = 0; t < reg.size(); ++t) {
        if (((csub.constant >> t) & 1U) == 0) {
            continue;
        }
        for (std::size_t q = reg.size(); q-- > t;) {
            std::vector<std::size_t> controls{control};
            for (std::size_t low = t; low < q; ++low) {
                out.push_back(Gate::x(reg[low]));
                controls.push_back(reg[low]);
            }
            out.push_back(Gate::mcx(controls, reg[q]));
            for (std::size_t low = t; low < q; ++low) {
                out.push_back(Gate::x(reg[low]));
            }
        }
    }
    return out;
}

CircuitMetrics metrics(const Circuit &circuit) {
    CircuitMetrics m;
    m.parameters = circuit.parameter_count();
    std::vector<std::size_t> ready(circuit.qubit_count(), 0);

    auto schedule = [&](std::span<const std::size_t> qubits, std::size_t cost,
                        std::size_t depth) {
        if (cost == 0) {
            return;
        }
        m.two_qubit_gates += cost;
        std::size_t start = 0;
        for (auto q : qubits) {
            start = std::max(start, ready[q]);
        }
        for (auto q : qubits) {
            ready[q] = start + depth;
        }
        m.two_qubit_depth = std::max(m.two_qubit_depth, start + depth);
    };
    auto account = [&](const Gate &g) {
        switch (g.kind) {
        case GateKind::cnot:
        case GateKind::cry:
        case GateKind::rzz:
            schedule(g.qubits, 1, 1);
            break;
        case GateKind::mcx:
            schedule(g.qubits, mcx_two_qubit_cost(g.control_count()),
                     mcx_two_qubit_depth(g.control_count()));
            break;
        default:
            break;
        }
    };
    for (const auto &g : circuit.gates()) {
        if (g.kind == GateKind::csub) {
            for (const auto &part : decompose_csub(g)) {
                account(part);
            }
        } else {
            account(g);
        }
    }
    return m;
}

} // namespace qvarsched
