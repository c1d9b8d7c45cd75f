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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qvarsched/bitstring.hpp"
#include "qvarsched/circuit.hpp"
#include "qvarsched/encoder.hpp"

namespace qvarsched {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 24;

/// Dense statevector. Amplitude index bit (n - 1 - q) holds qubit q, so
/// qubit 0 is the most significant bit, matching Bitstring.
class StateVector {
  public:
    /// |0...0> on n qubits. Throws QubitCountExceeded above max_qubits.
    explicit StateVector(std::size_t qubit_count, std::size_t max_qubits = kDefaultMaxQubits);
    StateVector(std::size_t qubit_count, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex amplitude(const Bitstring &bits) const;

    [[nodiscard]] double norm_squared() const noexcept;
    [[nodiscard]] std::vector<double> probabilities() const;

    /// Applies one gate with its angle already resolved.
    void apply(const Gate &gate, double angle = 0.0);

  private:
    void apply_single(std::size_t qubit, const Complex (&m)[2][2]);
    void apply_controlled(std::size_t control, std::size_t target, const Complex (&m)[2][2]);
    void apply_rzz(std::size_t a, std::size_t b, double angle);
    void apply_mcx(std::span<const std::size_t> controls, std::size_t target);
    void apply_csub(std::size_t control, std::span<const std::size_t> reg, std::uint64_t constant);

    [[nodiscard]] std::uint64_t mask(std::size_t qubit) const noexcept {
        return std::uint64_t{1} << (qubits_ - 1 - qubit);
    }

    std::size_t qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// U(theta)|0...0>. Throws UnboundParameter when fewer values than the
/// circuit's parameter count are supplied.
[[nodiscard]] StateVector run(const Circuit &circuit, std::span<const double> parameters,
                              std::size_t max_qubits = kDefaultMaxQubits);

/// sum_z |<z|psi>|^2 E(z) with E given per basis index.
[[nodiscard]] double expectation_diagonal(const StateVector &state,
                                          std::span<const double> diagonal);
[[nodiscard]] double expectation_diagonal(const StateVector &state, const IsingModel &model);

struct Counts {
    std::map<Bitstring, std::uint64_t> histogram;
    std::uint64_t shots = 0;

    [[nodiscard]] std::uint64_t count(const Bitstring &bits) const;
    friend bool operator==(const Counts &, const Counts &) = default;
};

/// Multinomial draw of `shots` outcomes from |amplitude|^2, reproducible
/// for a given seed. Throws std::invalid_argument when shots == 0.
[[nodiscard]] Counts sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

/// Same, from a precomputed probability vector.
[[nodiscard]] Counts sample_probabilities(std::span<const double> probabilities,
                                          std::size_t qubit_count, std::uint64_t shots,
                                          std::uint64_t seed);

} // namespace qvarsched
