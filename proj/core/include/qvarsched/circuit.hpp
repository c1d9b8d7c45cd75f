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
#include <vector>

namespace qvarsched {

enum class GateKind { x, h, rx, ry, rz, cnot, cry, rzz, mcx, csub };

[[nodiscard]] const char *gate_name(GateKind kind) noexcept;

/// Rotation angle: either a literal, or scale * parameters[index].
struct Angle {
    std::optional<std::size_t> parameter;
    double scale = 1.0;
    double value = 0.0;

    static Angle literal(double radians) { return {std::nullopt, 1.0, radians}; }
    static Angle bound(std::size_t index, double scale = 1.0) { return {index, scale, 0.0}; }

    /// Throws UnboundParameter when the referenced slot is missing.
    [[nodiscard]] double resolve(std::span<const double> parameters) const;
};

/// One gate. Operand order: controls first, target last. For csub the
/// first operand is the control and the rest is the register, least
/// significant bit first.
struct Gate {
    GateKind kind = GateKind::x;
    std::vector<std::size_t> qubits;
    Angle angle;
    std::uint64_t constant = 0; ///< csub only

    static Gate x(std::size_t q) { return {GateKind::x, {q}, {}, 0}; }
    static Gate h(std::size_t q) { return {GateKind::h, {q}, {}, 0}; }
    static Gate rx(std::size_t q, Angle a) { return {GateKind::rx, {q}, a, 0}; }
    static Gate ry(std::size_t q, Angle a) { return {GateKind::ry, {q}, a, 0}; }
    static Gate rz(std::size_t q, Angle a) { return {GateKind::rz, {q}, a, 0}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::cnot, {control, target}, {}, 0};
    }
    static Gate cry(std::size_t control, std::size_t target, Angle a) {
        return {GateKind::cry, {control, target}, a, 0};
    }
    static Gate rzz(std::size_t a, std::size_t b, Angle angle) {
        return {GateKind::rzz, {a, b}, angle, 0};
    }
    static Gate mcx(std::vector<std::size_t> controls, std::size_t target);
    /// |c>|r> -> |c>|(r - constant) mod 2^m> when c = 1.
    static Gate csub(std::size_t control, std::vector<std::size_t> reg, std::uint64_t constant);

    [[nodiscard]] bool has_angle() const noexcept;
    /// Number of control qubits for cnot / cry / mcx / csub, 0 otherwise.
    [[nodiscard]] std::size_t control_count() const noexcept;
};

/// Ordered gate list over a fixed register with named parameter slots.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t qubit_count) : qubits_(qubit_count) {}

    /// Registers a named parameter and returns its slot index.
    std::size_t add_parameter(std::string name);
    /// Throws std::invalid_argument on out-of-range or repeated operands,
    /// or a reference to an unregistered parameter slot.
    void append(Gate gate);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] const std::vector<std::string> &parameter_names() const noexcept {
        return parameters_;
    }
    [[nodiscard]] std::size_t parameter_count() const noexcept { return parameters_.size(); }

    /// One gate per line, e.g. "cry q0 q1 theta_1" or "csub q0 | q6 q7 -2".
    [[nodiscard]] std::string to_text() const;

  private:
    std::size_t qubits_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::string> parameters_;
};

} // namespace qvarsched
