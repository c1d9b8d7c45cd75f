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
#include <map>
#include <utility>
#include <vector>

#include "qvarsched/bitstring.hpp"
#include "qvarsched/problem_model.hpp"
#include "qvarsched/rational.hpp"

namespace qvarsched {

/// Diagonal Hamiltonian
///   H = constant + sum_i linear_i Z_i + sum_{i<j} pairwise_ij Z_i Z_j
/// with coefficients stored exactly as they appear in the expanded
/// polynomial. Measuring bit b on a qubit corresponds to spin z = 1 - 2b.
struct IsingModel {
    std::size_t qubit_count = 0;
    Rational constant = 0;
    std::vector<Rational> linear;
    /// Keys (i, j) with i < j; zero coefficients are not stored.
    std::map<std::pair<std::size_t, std::size_t>, Rational> pairwise;
    Rational penalty = 0;

    friend bool operator==(const IsingModel &, const IsingModel &) = default;
};

/// A = 1 + sum_ij v_ij, strictly larger than any achievable gain.
[[nodiscard]] Rational penalty_weight(const AssignmentProblem &problem);

/// Builds the penalised objective
///   -sum v_ij x_ij + A sum_j (sum_i w_i x_ij + sum_k 2^k b_jk - B_j)^2
///                  + A sum_i (sum_j x_ij [+ p_i] - 1)^2
/// and rewrites it in spins through x = (1 - z) / 2.
[[nodiscard]] IsingModel encode(const AssignmentProblem &problem, const VariableLayout &layout);

/// Exact energy of a bitstring. Throws MalformedBitstring on size mismatch.
[[nodiscard]] Rational energy(const IsingModel &model, const Bitstring &bits);

struct IsingTerm {
    std::vector<std::size_t> qubits; ///< empty for the constant, else 1 or 2 qubits
    Rational coefficient;

    friend bool operator==(const IsingTerm &, const IsingTerm &) = default;
};

/// Constant first, then singleton terms by qubit, then pairs in (i, j)
/// order. Zero singleton coefficients are skipped.
[[nodiscard]] std::vector<IsingTerm> to_terms(const IsingModel &model);

/// Rebuilds a model from a term list. Repeated terms are summed and pairs
/// are normalised to i < j. Throws std::invalid_argument on indices out of
/// range or terms with more than two qubits.
[[nodiscard]] IsingModel from_terms(std::size_t qubit_count, const std::vector<IsingTerm> &terms,
                                    const Rational &penalty = 0);

/// Integer-scaled copy of a model: energy(index) = numerator(index) / denominator.
/// Used for exact bulk evaluation over basis indices. Throws
/// std::overflow_error when a scaled coefficient does not fit in 64 bits.
class ScaledIsingModel {
  public:
    explicit ScaledIsingModel(const IsingModel &model);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubits_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return denominator_; }
    [[nodiscard]] std::int64_t numerator(std::uint64_t index) const noexcept;

    /// Numerators of all 2^Q basis energies, in basis-index order. Walks
    /// the indices in Gray-code order so each step touches one qubit.
    [[nodiscard]] std::vector<std::int64_t> all_numerators() const;

  private:
    std::size_t qubits_ = 0;
    std::int64_t denominator_ = 1;
    std::int64_t constant_ = 0;
    std::vector<std::int64_t> linear_;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> neighbours_;
};

/// Energies of all basis states as doubles, indexed like the statevector.
[[nodiscard]] std::vector<double> energy_diagonal(const IsingModel &model);

} // namespace qvarsched
