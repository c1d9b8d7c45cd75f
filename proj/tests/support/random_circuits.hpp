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

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "qvarsched/circuit.hpp"

namespace qvarsched::testing {

inline constexpr GateKind kAllGateKinds[] = {GateKind::x,   GateKind::h,    GateKind::rx,
                                             GateKind::ry,  GateKind::rz,   GateKind::cnot,
                                             GateKind::cry, GateKind::rzz,  GateKind::mcx,
                                             GateKind::csub};

/// Random gate of the given kind on an n-qubit register (n >= 2; mcx and
/// csub need n >= 3 to have room for more than one control / register bit,
/// but fall back to the smallest legal shape otherwise).
inline Gate random_gate(GateKind kind, std::size_t n, std::mt19937_64 &rng) {
    std::vector<std::size_t> order(n);
    for (std::size_t q = 0; q < n; ++q) order[q] = q;
    std::shuffle(order.begin(), order.end(), rng);
    const double theta =
        std::uniform_real_distribution<double>(-2 * std::numbers::pi, 2 * std::numbers::pi)(rng);
    const Angle a = Angle::literal(theta);
    switch (kind) {
    case GateKind::x: return Gate::x(order[0]);
    case GateKind::h: return Gate::h(order[0]);
    case GateKind::rx: return Gate::rx(order[0], a);
    case GateKind::ry: return Gate::ry(order[0], a);
    case GateKind::rz: return Gate::rz(order[0], a);
    case GateKind::cnot: return Gate::cnot(order[0], order[1]);
    case GateKind::cry: return Gate::cry(order[0], order[1], a);
    case GateKind::rzz: return Gate::rzz(order[0], order[1], a);
    case GateKind::mcx: {
        const auto controls = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        return Gate::mcx({order.begin(), order.begin() + static_cast<long>(controls)},
                         order[controls]);
    }
    case GateKind::csub: {
        const auto width = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        const auto constant =
            std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << width) - 1)(rng);
        return Gate::csub(order[0], {order.begin() + 1, order.begin() + 1 + static_cast<long>(width)},
                          constant);
    }
    }
    return Gate::x(0);
}

/// Random circuit on n qubits with `length` gates that contains every gate
/// kind at least once, starting with a generic-state preparation layer.
inline Circuit random_circuit(std::size_t n, std::size_t length, std::mt19937_64 &rng) {
    Circuit c(n);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    for (std::size_t q = 0; q < n; ++q) {
        c.append(Gate::ry(q, Angle::literal(angle(rng))));
        c.append(Gate::rz(q, Angle::literal(angle(rng))));
    }
    std::vector<GateKind> kinds(std::begin(kAllGateKinds), std::end(kAllGateKinds));
    std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
    while (kinds.size() < length) kinds.push_back(kAllGateKinds[pick(rng)]);
    std::shuffle(kinds.begin(), kinds.end(), rng);
    for (GateKind k : kinds) c.append(random_gate(k, n, rng));
    return c;
}

} // namespace qvarsched::testing
