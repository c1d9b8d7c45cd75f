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

#include <gtest/gtest.h>

#include <random>

#include "qvarsched/encoder.hpp"
#include "test_support.hpp"

namespace qvarsched {
namespace {

using testing::all_bitstrings;
using testing::reference_instance;

Rational dec(const char *s) { return parse_rational(s); }

TEST(Encoder, GoldenReferenceHamiltonian) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const IsingModel m = encode(p, build_layout(p));
    EXPECT_EQ(m.qubit_count, 8U);
    EXPECT_EQ(m.penalty, Rational(11));
    EXPECT_EQ(m.constant, dec("55.5"));
    const std::vector<Rational> linear{dec("12"), dec("-10.5"), dec("7"),   dec("-5"),
                                       dec("6.5"), dec("-5"),   dec("5.5"), dec("-5.5")};
    EXPECT_EQ(m.linear, linear);
    // 1-based pairs as printed in the reference listing.
    const std::vector<std::tuple<int, int, const char *>> pairs{
        {1, 2, "5.5"}, {1, 3, "11"},  {1, 5, "11"},  {1, 7, "11"},  {2, 4, "11"},
        {2, 6, "11"},  {2, 8, "11"},  {3, 4, "5.5"}, {3, 5, "5.5"}, {3, 7, "5.5"},
        {4, 6, "5.5"}, {4, 8, "5.5"}, {5, 6, "5.5"}, {5, 7, "5.5"}, {6, 8, "5.5"}};
    std::map<std::pair<std::size_t, std::size_t>, Rational> expected;
    for (const auto &[a, b, c] : pairs) {
        expected[{static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)}] = dec(c);
    }
    EXPECT_EQ(m.pairwise, expected);
}

TEST(Encoder, PenaltyIsOnePlusTotalValue) {
    EXPECT_EQ(penalty_weight(reference_instance(ProblemVariant::eohl())), Rational(11));
    EXPECT_EQ(penalty_weight(reference_instance(ProblemVariant::ecfl())), Rational(11));
    const AssignmentProblem p(ProblemVariant::eofl(), {{1, {dec("0.5"), dec("1/3")}}},
                              {{1, 0}, {1, 0}});
    EXPECT_EQ(penalty_weight(p), Rational(11, 6));
}

// Penalised objective evaluated on binary variables straight from the
// constraint equalities.
Rational objective_by_definition(const AssignmentProblem &p, const VariableLayout &layout,
                                 const Bitstring &bits) {
    const Rational a = penalty_weight(p);
    Rational total = 0;
    for (std::size_t i = 0; i < p.process_count(); ++i) {
        Rational row = -1;
        for (std::size_t j = 0; j < p.node_count(); ++j) {
            if (bits[layout.assign_qubit(i, j)]) {
                total -= p.processes()[i].values[j];
                row += 1;
            }
        }
        if (auto c = layout.cloud_qubit(i); c && bits[*c]) row += 1;
        total += a * row * row;
    }
    for (std::size_t j = 0; j < p.node_count(); ++j) {
        Rational node = -p.nodes()[j].capacity;
        for (std::size_t i = 0; i < p.process_count(); ++i) {
            if (bits[layout.assign_qubit(i, j)]) node += p.processes()[i].weight;
        }
        const auto reg = layout.slack_register(j);
        for (std::size_t k = 0; k < reg.size(); ++k) {
            if (bits[reg[k]]) node += Rational(std::int64_t{1} << k);
        }
        total += a * node * node;
    }
    return total;
}

TEST(Encoder, ExhaustiveEquivalenceOnReferenceVariants) {
    for (const auto &variant : testing::all_variants()) {
        const auto p = reference_instance(variant);
        const auto layout = build_layout(p);
        const IsingModel m = encode(p, layout);
        for (const auto &bits : all_bitstrings(layout.qubit_count())) {
            ASSERT_EQ(energy(m, bits), objective_by_definition(p, layout, bits))
                << variant.name() << ' ' << bits.str();
        }
    }
}

TEST(Encoder, ExhaustiveEquivalenceOnRandomInstances) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = testing::random_instance(rng, 11);
        const auto layout = build_layout(p);
        const IsingModel m = encode(p, layout);
        for (const auto &bits : all_bitstrings(layout.qubit_count())) {
            ASSERT_EQ(energy(m, bits), objective_by_definition(p, layout, bits));
        }
    }
}

TEST(Energy, ReferenceExamples) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const IsingModel m = encode(p, build_layout(p));
    EXPECT_EQ(energy(m, Bitstring::parse("10100101")), Rational(-6));
    EXPECT_GE(energy(m, Bitstring::parse("11100000")), Rational(1));
    EXPECT_THROW((void)energy(m, Bitstring::parse("1")), std::exception);
}

TEST(Energy, FeasibleEnergyIsMinusGain) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = testing::random_instance(rng, 11);
        const auto layout = build_layout(p);
        const IsingModel m = encode(p, layout);
        for (const auto &bits : all_bitstrings(layout.qubit_count())) {
            const Rational e = energy(m, bits);
            if (check_feasible(p, layout, bits).feasible) {
                ASSERT_EQ(e, -gain(p, decode(p, layout, bits)));
            } else {
                ASSERT_GT(e, 0);
            }
        }
    }
}

TEST(Terms, ReferenceListingShape) {
    const auto p = reference_instance(ProblemVariant::eohl());
    const auto terms = to_terms(encode(p, build_layout(p)));
    ASSERT_EQ(terms.size(), 1U + 8U + 15U);
    EXPECT_TRUE(terms[0].qubits.empty());
    EXPECT_EQ(terms[0].coefficient, dec("55.5"));
}

TEST(Terms, RoundTripAndZeroDropping) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = testing::random_instance(rng, 14);
        const IsingModel m = encode(p, build_layout(p));
        EXPECT_EQ(from_terms(m.qubit_count, to_terms(m), m.penalty), m);
    }
    const IsingModel cancelled =
        from_terms(2, {{{0, 1}, Rational(1)}, {{1, 0}, Rational(-1)}, {{0, 0}, Rational(2)}});
    EXPECT_TRUE(cancelled.pairwise.empty());
    EXPECT_EQ(cancelled.constant, Rational(2));
    EXPECT_THROW((void)from_terms(2, {{{0, 2}, Rational(1)}}), std::invalid_argument);
    EXPECT_THROW((void)from_terms(3, {{{0, 1, 2}, Rational(1)}}), std::invalid_argument);
}

TEST(ScaledModel, MatchesExactEnergyEverywhere) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = testing::random_instance(rng, 12);
        const IsingModel m = encode(p, build_layout(p));
        const ScaledIsingModel scaled(m);
        const auto all = scaled.all_numerators();
        const auto diag = energy_diagonal(m);
        ASSERT_EQ(all.size(), std::size_t{1} << m.qubit_count);
        for (std::uint64_t k = 0; k < all.size(); ++k) {
            const Rational exact = energy(m, Bitstring::from_index(k, m.qubit_count));
            ASSERT_EQ(Rational(all[k], scaled.denominator()), exact);
            ASSERT_EQ(scaled.numerator(k), all[k]);
            ASSERT_DOUBLE_EQ(diag[k], to_double(exact));
        }
    }
}

} // namespace
} // namespace qvarsched
