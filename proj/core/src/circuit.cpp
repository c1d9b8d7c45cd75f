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

#include "qvarsched/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qvarsched/errors.hpp"

namespace qvarsched {

const char *gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::x: return "x";
    case GateKind::h: return "h";
    case GateKind::rx: return "rx";
    case GateKind::ry: return "ry";
    case GateKind::rz: return "rz";
    case GateKind::cnot: return "cnot";
    case GateKind::cry: return "cry";
    case GateKind::rzz: return "rzz";
    case GateKind::mcx: return "mcx";
    case GateKind::csub: return "csub";
    }
    return "?";
}

double Angle::resolve(std::span<const double> parameters) const {
    if (!parameter) {
        return value;
    }
    if (*parameter >= parameters.size()) {
        throw UnboundParameter("parameter slot " + std::to_string(*parameter) +
                               " is not bound (" + std::to_string(parameters.size()) +
                               " values given)");
    }
    return scale * parameters[*parameter];
}

Gate Gate::mcx(std::vector<std::size_t> controls, std::size_t target) {
    controls.push_back(target);
    return {GateKind::mcx, std::move(controls), {}, 0};
}

Gate Gate::csub(std::size_t control, std::vector<std::size_t> reg, std::uint64_t constant) {
    reg.insert(reg.begin(), control);
    Gate g{GateKind::csub, std::move(reg), {}, 0};
    const std::size_t width = g.qubits.size() - 1;
    g.constant = width >= 64 ? constant : constant % (std::uint64_t{1} << width);
    return g;
}

bool Gate::has_angle() const noexcept {
    switch (kind) {
    case GateKind::rx:
    case GateKind::ry:
    case GateKind::rz:
    case GateKind::cry:
    case GateKind::rzz:
        return true;
    default:
        return false;
    }
}

std::size_t Gate::control_count() const noexcept {
    switch (kind) {
    case GateKind::cnot:
    case GateKind::cry:
    case GateKind::csub:
        return 1;
    case GateKind::mcx:
        return qubits.size() - 1;
    default:
        return 0;
    }
}

std::size_t Circuit::add_parameter(std::string name) {
    parameters_.push_back(std::move(name));
    return parameters_.size() - 1;
}

void Circuit::append(Gate gate) {
    std::size_t expected = 0;
    switch (gate.kind) {
    case GateKind::x:
    case GateKind::h:
    case GateKind::rx:
    case GateKind::ry:
    case GateKind::rz:
        expected = 1;
        break;
    case GateKind::cnot:
    case GateKind::cry:
    case GateKind::rzz:
        expected = 2;
        break;
    case GateKind::mcx:
    case GateKind::csub:
        if (gate.qubits.size() < 2) {
            throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                        " needs at least two operands");
        }
        expected = gate.qubits.size();
        break;
    }
    if (gate.qubits.size() != expected) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": wrong operand count");
    }
    auto sorted = gate.qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": repeated operand");
    }
    if (!sorted.empty() && sorted.back() >= qubits_) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                    ": operand out of range");
    }
    if (gate.has_angle() && gate.angle.parameter && *gate.angle.parameter >= parameters_.size()) {
        throw std::invalid_argument("gate references unregistered parameter slot");
    }
    gates_.push_back(std::move(gate));
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out.precision(17);
    out << "qubits " << qubits_ << "\n";
    out << "parameters " << parameters_.size();
    for (const auto &p : parameters_) {
        out << ' ' << p;
    }
    out << "\n";
    for (const auto &g : gates_) {
        out << gate_name(g.kind);
        for (std::size_t k = 0; k < g.qubits.size(); ++k) {
            if (g.kind == GateKind::csub && k == 1) {
                out << " |";
            }
            out << " q" << g.qubits[k];
        }
        if (g.kind == GateKind::csub) {
            out << " -" << g.constant;
        }
        if (g.has_angle()) {
            if (g.angle.parameter) {
                out << ' ';
                if (g.angle.scale != 1.0) {
                    out << g.angle.scale << '*';
                }
                out << parameters_[*g.angle.parameter];
            } else {
                out << ' ' << g.angle.value;
            }
        }
        out << "\n";
    }
    return out.str();
}

} // namespace qvarsched
