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

#include "qvarsched/encoder.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "qvarsched/errors.hpp"

namespace qvarsched {
namespace {

using boost::multiprecision::cpp_int;

/// Quadratic pseudo-boolean polynomial over binary variables.
struct Qubo {
    explicit Qubo(std::size_t n) : linear(n, 0) {}

    Rational constant = 0;
    std::vector<Rational> linear;
    std::map<std::pair<std::size_t, std::size_t>, Rational> quadratic;

    void add_pair(std::size_t a, std::size_t b, const Rational &c) {
        if (a == b) {
            linear[a] += c; // x^2 = x
            return;
        }
        quadratic[{std::min(a, b), std::max(a, b)}] += c;
    }

    /// Adds weight * (sum_k c_k x_k - rhs)^2.
    void add_squared(const std::vector<std::pair<std::size_t, std::int64_t>> &form,
                     std::int64_t rhs, const Rational &weight) {
        constant += weight * Rational(rhs) * Rational(rhs);
        for (std::size_t a = 0; a < form.size(); ++a) {
            const auto [qa, ca] = form[a];
            linear[qa] += weight * (Rational(ca) * Rational(ca) - 2 * Rational(rhs) * Rational(ca));
            for (std::size_t b = a + 1; b < form.size(); ++b) {
                const auto [qb, cb] = form[b];
                add_pair(qa, qb, weight * 2 * Rational(ca) * Rational(cb));
            }
        }
    }
};

} // namespace

Rational penalty_weight(const AssignmentProblem &problem) {
    Rational a = 1;
    for (const auto &p : problem.processes()) {
        for (const auto &v : p.values) {
            a += v;
        }
    }
    return a;
}

IsingModel encode(const AssignmentProblem &problem, const VariableLayout &layout) {
    const std::size_t q = layout.qubit_count();
    const Rational a = penalty_weight(problem);
    Qubo qubo(q);

    for (std::size_t i = 0; i < problem.process_count(); ++i) {
        for (std::size_t j = 0; j < problem.node_count(); ++j) {
            qubo.linear[layout.assign_qubit(i, j)] -= problem.processes()[i].values[j];
        }
    }
    for (std::size_t j = 0; j < problem.node_count(); ++j) {
        std::vector<std::pair<std::size_t, std::int64_t>> form;
        for (std::size_t i = 0; i < problem.process_count(); ++i) {
            form.emplace_back(layout.assign_qubit(i, j), problem.processes()[i].weight);
        }
        const auto reg = layout.slack_register(j);
        for (std::size_t k = 0; k < reg.size(); ++k) {
            form.emplace_back(reg[k], std::int64_t{1} << k);
        }
        qubo.add_squared(form, problem.nodes()[j].capacity, a);
    }
    for (std::size_t i = 0; i < problem.process_count(); ++i) {
        std::vector<std::pair<std::size_t, std::int64_t>> form;
        for (auto qubit : layout.process_block(i)) {
            form.emplace_back(qubit, 1);
        }
        qubo.add_squared(form, 1, a);
    }

    // x = (1 - z) / 2
    IsingModel model;
    model.qubit_count = q;
    model.penalty = a;
    model.linear.assign(q, 0);
    model.constant = qubo.constant;
    for (std::size_t k = 0; k < q; ++k) {
        model.constant += qubo.linear[k] / 2;
        model.linear[k] -= qubo.linear[k] / 2;
    }
    for (const auto &[key, c] : qubo.quadratic) {
        if (c == 0) {
            continue;
        }
        const Rational quarter = c / 4;
        model.constant += quarter;
        model.linear[key.first] -= quarter;
        model.linear[key.second] -= quarter;
        model.pairwise[key] += quarter;
    }
    std::erase_if(model.pairwise, [](const auto &kv) { return kv.second == 0; });
    return model;
}

Rational energy(const IsingModel &model, const Bitstring &bits) {
    if (bits.size() != model.qubit_count) {
        throw MalformedBitstring(model.qubit_count, bits.size());
    }
    auto spin = [&](std::size_t qubit) { return bits[qubit] ? -1 : 1; };
    Rational e = model.constant;
    for (std::size_t k = 0; k < model.qubit_count; ++k) {
        e += model.linear[k] * spin(k);
    }
    for (const auto &[key, c] : model.pairwise) {
        e += c * (spin(key.first) * spin(key.second));
    }
    return e;
}

std::vector<IsingTerm> to_terms(const IsingModel &model) {
    std::vector<IsingTerm> terms;
    terms.push_back({{}, model.constant});
    for (std::size_t k = 0; k < model.qubit_count; ++k) {
        if (model.linear[k] != 0) {
            terms.push_back({{k}, model.linear[k]});
        }
    }
    for (const auto &[key, c] : model.pairwise) {
        terms.push_back({{key.first, key.second}, c});
    }
    return terms;
}

IsingModel from_terms(std::size_t qubit_count, const std::vector<IsingTerm> &terms,
                      const Rational &penalty) {
    IsingModel model;
    model.qubit_count = qubit_count;
    model.linear.assign(qubit_count, 0);
    model.penalty = penalty;
    for (const auto &t : terms) {
        for (auto qubit : t.qubits) {
            if (qubit >= qubit_count) {
                throw std::invalid_argument("term index " + std::to_string(qubit) +
                                            " out of range");
            }
        }
        switch (t.qubits.size()) {
        case 0:
            model.constant += t.coefficient;
            break;
        case 1:
            model.linear[t.qubits[0]] += t.coefficient;
            break;
        case 2: {
            auto [a, b] = std::minmax(t.qubits[0], t.qubits[1]);
            if (a == b) {
                model.constant += t.coefficient; // Z_i Z_i = I
            } else {
                model.pairwise[{a, b}] += t.coefficient;
            }
            break;
        }
        default:
            throw std::invalid_argument("terms act on at most two qubits");
        }
    }
    std::erase_if(model.pairwise, [](const auto &kv) { return kv.second == 0; });
    return model;
}

ScaledIsingModel::ScaledIsingModel(const IsingModel &model)
    : qubits_(model.qubit_count), linear_(model.qubit_count, 0),
      neighbours_(model.qubit_count) {
    if (qubits_ > 63) {
        throw std::overflow_error("too many qubits for basis-index evaluation");
    }
    cpp_int den = boost::multiprecision::denominator(model.constant);
    auto fold = [&den](const Rational &r) {
        const cpp_int d = boost::multiprecision::denominator(r);
        den = den / boost::multiprecision::gcd(den, d) * d;
    };
    for (const auto &c : model.linear) fold(c);
    for (const auto &[key, c] : model.pairwise) fold(c);

    const cpp_int limit = std::numeric_limits<std::int64_t>::max() / 4;
    cpp_int bound = 0;
    auto scale = [&](const Rational &r) -> std::int64_t {
        const Rational s = r * Rational(den);
        const cpp_int n = boost::multiprecision::numerator(s);
        bound += abs(n);
        if (bound > limit) {
            throw std::overflow_error("scaled Ising coefficients overflow 64 bits");
        }
        return n.convert_to<std::int64_t>();
    };
    denominator_ = den.convert_to<std::int64_t>();
    constant_ = scale(model.constant);
    for (std::size_t k = 0; k < qubits_; ++k) {
        linear_[k] = scale(model.linear[k]);
    }
    for (const auto &[key, c] : model.pairwise) {
        const auto v = scale(c);
        neighbours_[key.first].emplace_back(key.second, v);
        neighbours_[key.second].emplace_back(key.first, v);
    }
}

std::int64_t ScaledIsingModel::numerator(std::uint64_t index) const noexcept {
    auto spin = [&](std::size_t qubit) -> std::int64_t {
        return ((index >> (qubits_ - 1 - qubit)) & 1U) != 0 ? -1 : 1;
    };
    std::int64_t e = constant_;
    for (std::size_t k = 0; k < qubits_; ++k) {
        const auto sk = spin(k);
        e += linear_[k] * sk;
        for (const auto &[other, c] : neighbours_[k]) {
            if (other > k) {
                e += c * sk * spin(other);
            }
        }
    }
    return e;
}

std::vector<std::int64_t> ScaledIsingModel::all_numerators() const {
    const std::uint64_t dim = std::uint64_t{1} << qubits_;
    std::vector<std::int64_t> out(dim);
    // spins[q] for the current Gray-code state, starting from all zeros.
    std::vector<std::int64_t> spins(qubits_, 1);
    std::int64_t e = numerator(0);
    std::uint64_t gray = 0;
    out[0] = e;
    for (std::uint64_t step = 1; step < dim; ++step) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(step));
        const std::size_t qubit = qubits_ - 1 - bit;
        std::int64_t field = linear_[qubit];
        for (const auto &[other, c] : neighbours_[qubit]) {
            field += c * spins[other];
        }
        e -= 2 * spins[qubit] * field;
        spins[qubit] = -spins[qubit];
        gray ^= std::uint64_t{1} << bit;
        out[gray] = e;
    }
    return out;
}

std::vector<double> energy_diagonal(const IsingModel &model) {
    const ScaledIsingModel scaled(model);
    const auto numerators = scaled.all_numerators();
    const auto den = static_cast<double>(scaled.denominator());
    std::vector<double> out(numerators.size());
    for (std::size_t k = 0; k < numerators.size(); ++k) {
        out[k] = static_cast<double>(numerators[k]) / den;
    }
    return out;
}

} // namespace qvarsched
