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

#include "qvarsched/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qvarsched/errors.hpp"

namespace qvarsched {

StateVector::StateVector(std::size_t qubit_count, std::size_t max_qubits)
    : qubits_(qubit_count) {
    if (qubit_count > max_qubits) {
        throw QubitCountExceeded(qubit_count, max_qubits);
    }
    amplitudes_.assign(std::size_t{1} << qubit_count, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t qubit_count, std::vector<Complex> amplitudes)
    : qubits_(qubit_count), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (std::size_t{1} << qubit_count)) {
        throw DimensionMismatch("amplitude vector length does not match 2^" +
                                std::to_string(qubit_count));
    }
}

Complex StateVector::amplitude(const Bitstring &bits) const {
    if (bits.size() != qubits_) {
        throw MalformedBitstring(qubits_, bits.size());
    }
    return amplitudes_[bits.to_index()];
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return p;
}

void StateVector::apply_single(std::size_t qubit, const Complex (&m)[2][2]) {
    const std::uint64_t bit = mask(qubit);
    const std::uint64_t dim = amplitudes_.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
        for (std::uint64_t i0 = base; i0 < base + bit; ++i0) {
            const std::uint64_t i1 = i0 | bit;
            const Complex a0 = amplitudes_[i0];
            const Complex a1 = amplitudes_[i1];
            amplitudes_[i0] = m[0][0] * a0 + m[0][1] * a1;
            amplitudes_[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply_controlled(std::size_t control, std::size_t target,
                                   const Complex (&m)[2][2]) {
    const std::uint64_t cbit = mask(control);
    const std::uint64_t tbit = mask(target);
    const std::uint64_t dim = amplitudes_.size();
    for (std::uint64_t i0 = 0; i0 < dim; ++i0) {
        if ((i0 & cbit) == 0 || (i0 & tbit) != 0) {
            continue;
        }
        const std::uint64_t i1 = i0 | tbit;
        const Complex a0 = amplitudes_[i0];
        const Complex a1 = amplitudes_[i1];
        amplitudes_[i0] = m[0][0] * a0 + m[0][1] * a1;
        amplitudes_[i1] = m[1][0] * a0 + m[1][1] * a1;
    }
}

void StateVector::apply_rzz(std::size_t a, std::size_t b, double angle) {
    const std::uint64_t ma = mask(a);
    const std::uint64_t mb = mask(b);
    const Complex even = std::polar(1.0, -angle / 2);
    const Complex odd = std::polar(1.0, angle / 2);
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        const bool parity = ((i & ma) != 0) != ((i & mb) != 0);
        amplitudes_[i] *= parity ? odd : even;
    }
}

void StateVector::apply_mcx(std::span<const std::size_t> controls, std::size_t target) {
    std::uint64_t cmask = 0;
    for (auto c : controls) {
        cmask |= mask(c);
    }
    const std::uint64_t tbit = mask(target);
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & cmask) == cmask && (i & tbit) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | tbit]);
        }
    }
}

void StateVector::apply_csub(std::size_t control, std::span<const std::size_t> reg,
                             std::uint64_t constant) {
    const std::size_t width = reg.size();
    const std::uint64_t modulus_mask = (std::uint64_t{1} << width) - 1;
    if ((constant & modulus_mask) == 0) {
        return;
    }
    const std::uint64_t cbit = mask(control);
    std::uint64_t reg_mask = 0;
    for (auto q : reg) {
        reg_mask |= mask(q);
    }
    auto read = [&](std::uint64_t index) {
        std::uint64_t value = 0;
        for (std::size_t k = 0; k < width; ++k) {
            if ((index & mask(reg[k])) != 0) {
                value |= std::uint64_t{1} << k;
            }
        }
        return value;
    };
    auto write = [&](std::uint64_t index, std::uint64_t value) {
        index &= ~reg_mask;
        for (std::size_t k = 0; k < width; ++k) {
            if (((value >> k) & 1U) != 0) {
                index |= mask(reg[k]);
            }
        }
        return index;
    };
    std::vector<Complex> out(amplitudes_.size());
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & cbit) == 0) {
            out[i] = amplitudes_[i];
            continue;
        }
        const std::uint64_t shifted = (read(i) - constant) & modulus_mask;
        out[write(i, shifted)] = amplitudes_[i];
    }
    amplitudes_.swap(out);
}

void StateVector::apply(const Gate &gate, double angle) {
    const auto &q = gate.qubits;
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const Complex i_unit{0.0, 1.0};
    switch (gate.kind) {
    case GateKind::x: {
        const Complex m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
        apply_single(q[0], m);
        break;
    }
    case GateKind::h: {
        const double r = 1.0 / std::sqrt(2.0);
        const Complex m[2][2] = {{r, r}, {r, -r}};
        apply_single(q[0], m);
        break;
    }
    case GateKind::rx: {
        const Complex m[2][2] = {{c, -i_unit * s}, {-i_unit * s, c}};
        apply_single(q[0], m);
        break;
    }
    case GateKind::ry: {
        const Complex m[2][2] = {{c, -s}, {s, c}};
        apply_single(q[0], m);
        break;
    }
    case GateKind::rz: {
        const Complex m[2][2] = {{std::polar(1.0, -angle / 2), 0.0},
                                 {0.0, std::polar(1.0, angle / 2)}};
        apply_single(q[0], m);
        break;
    }
    case GateKind::cnot: {
        const Complex m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
        apply_controlled(q[0], q[1], m);
        break;
    }
    case GateKind::cry: {
        const Complex m[2][2] = {{c, -s}, {s, c}};
        apply_controlled(q[0], q[1], m);
        break;
    }
    case GateKind::rzz:
        apply_rzz(q[0], q[1], angle);
        break;
    case GateKind::mcx:
        apply_mcx(std::span(q).first(q.size() - 1), q.back());
        break;
    case GateKind::csub:
        apply_csub(q[0], std::span(q).subspan(1), gate.constant);
        break;
    }
}

StateVector run(const Circuit &circuit, std::span<const double> parameters,
                std::size_t max_qubits) {
    if (parameters.size() < circuit.parameter_count()) {
        throw UnboundParameter("circuit has " + std::to_string(circuit.parameter_count()) +
                               " parameters but " + std::to_string(parameters.size()) +
                               " values were bound");
    }
    StateVector state(circuit.qubit_count(), max_qubits);
    for (const auto &gate : circuit.gates()) {
        state.apply(gate, gate.has_angle() ? gate.angle.resolve(parameters) : 0.0);
    }
    return state;
}

double expectation_diagonal(const StateVector &state, std::span<const double> diagonal) {
    if (diagonal.size() != state.dimension()) {
        throw DimensionMismatch("diagonal has " + std::to_string(diagonal.size()) +
                                " entries, state has " + std::to_string(state.dimension()));
    }
    const auto amps = state.amplitudes();
    double e = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        e += std::norm(amps[k]) * diagonal[k];
    }
    return e;
}

double expectation_diagonal(const StateVector &state, const IsingModel &model) {
    if (model.qubit_count != state.qubit_count()) {
        throw DimensionMismatch("model acts on " + std::to_string(model.qubit_count) +
                                " qubits, state has " + std::to_string(state.qubit_count()));
    }
    const auto diagonal = energy_diagonal(model);
    return expectation_diagonal(state, diagonal);
}

std::uint64_t Counts::count(const Bitstring &bits) const {
    auto it = histogram.find(bits);
    return it == histogram.end() ? 0 : it->second;
}

Counts sample_probabilities(std::span<const double> probabilities, std::size_t qubit_count,
                            std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("at least one shot is required");
    }
    std::vector<double> cumulative(probabilities.size());
    double total = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        total += probabilities[k];
        cumulative[k] = total;
    }
    std::mt19937_64 rng(seed);
    std::map<std::uint64_t, std::uint64_t> by_index;
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53 uniform mantissa bits, independent of the library's distributions.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) {
            --it;
        }
        ++by_index[static_cast<std::uint64_t>(it - cumulative.begin())];
    }
    Counts counts;
    counts.shots = shots;
    for (const auto &[index, n] : by_index) {
        counts.histogram.emplace(Bitstring::from_index(index, qubit_count), n);
    }
    return counts;
}

Counts sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    const auto p = state.probabilities();
    return sample_probabilities(p, state.qubit_count(), shots, seed);
}

} // namespace qvarsched
