// Copyright 2026 The stabmmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "examples.hpp"
#include "properties.hpp"

namespace stabmmi {
namespace {

using oracle::Rng;

Tableau tableau_of(const std::vector<std::string> &rows) {
    std::string text;
    for (const auto &r : rows) {
        text += r + "\n";
    }
    return Tableau::from_text(text);
}

TEST(Tableau, ZeroStateAndValidation) {
    const auto t = Tableau::zero_state(3);
    EXPECT_TRUE(t.x().is_zero());
    EXPECT_EQ(t.z(), BitMatrix::identity(3));
    EXPECT_EQ(t.entropy(mask_of({0})), 0u);
    EXPECT_THROW(Tableau::zero_state(0), std::invalid_argument);
    // X_1 and Z_1 anticommute.
    EXPECT_THROW(Tableau(BitMatrix::from_strings({"10", "00"}), BitMatrix::from_strings({"00", "10"})),
                 InvariantViolation);
    // Dependent rows.
    EXPECT_THROW(Tableau(BitMatrix::from_strings({"10", "10"}), BitMatrix::from_strings({"00", "00"})),
                 InvariantViolation);
    EXPECT_THROW(Tableau(BitMatrix(2, 2), BitMatrix(3, 3)), InvariantViolation);
}

TEST(Tableau, GateColumnRules) {
    const auto t = tableau_of({"11" "00", "00" "11"}).apply_cnot(0, 1);
    EXPECT_EQ(t.x(), BitMatrix::from_strings({"10", "00"}));
    EXPECT_EQ(t.z(), BitMatrix::from_strings({"00", "01"}));
}

TEST(Tableau, HadamardSwapsColumns) {
    const auto t = Tableau::zero_state(2).apply_h(1);
    EXPECT_EQ(t.x(), BitMatrix::from_strings({"00", "01"}));
    EXPECT_EQ(t.z(), BitMatrix::from_strings({"10", "00"}));
    const auto s = t.apply_s(1);
    EXPECT_EQ(s.x(), t.x());
    EXPECT_EQ(s.z(), BitMatrix::from_strings({"10", "01"}));
}

TEST(Tableau, GateArgumentErrors) {
    const auto t = Tableau::zero_state(3);
    EXPECT_THROW(t.apply_h(3), std::out_of_range);
    EXPECT_THROW(t.apply_s(7), std::out_of_range);
    EXPECT_THROW(t.apply_cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(t.apply_cz(0, 0), std::invalid_argument);
    EXPECT_THROW(t.apply_cnot(0, 3), std::out_of_range);
    EXPECT_THROW(t.entropy(0), std::invalid_argument);
    EXPECT_THROW(t.entropy(mask_of({3})), std::invalid_argument);
}

TEST(Tableau, CzIsConjugatedCnotAndSymmetric) {
    Rng rng(41);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = oracle::uniform(rng, 2, 6);
        const auto tab = oracle::random_tableau(rng, n);
        const std::size_t a = oracle::uniform(rng, 0, n - 1);
        std::size_t b = oracle::uniform(rng, 0, n - 2);
        b += b >= a;
        const auto cz = tab.apply_cz(a, b);
        EXPECT_EQ(cz, tab.apply_h(b).apply_cnot(a, b).apply_h(b));
        EXPECT_EQ(cz, tab.apply_cz(b, a));
    }
}

TEST(Tableau, GhzPreparation) {
    const auto ghz = examples::ghz4();
    EXPECT_TRUE(ghz.same_group(tableau_of({"1111" "0000", "0000" "1100", "0000" "0110", "0000" "0011"})));
    const auto phi = examples::phi_state();
    EXPECT_TRUE(phi.same_group(tableau_of({"1110" "0000", "0000" "1100", "0000" "0110", "0000" "0001"})));
    EXPECT_FALSE(phi.same_group(ghz));
    EXPECT_EQ(phi.entropy(mask_of({3})), 0u);
    for (std::size_t q = 0; q < 3; ++q) {
        EXPECT_EQ(phi.entropy(mask_of({q})), 1u);
    }
}

TEST(Tableau, TextRoundTripAndErrors) {
    Rng rng(43);
    for (int t = 0; t < 200; ++t) {
        const auto tab = oracle::random_tableau(rng, oracle::uniform(rng, 1, 7));
        EXPECT_EQ(Tableau::from_text(tab.to_text()), tab);
    }
    EXPECT_THROW(Tableau::from_text(""), ParseError);
    EXPECT_THROW(Tableau::from_text("101\n"), ParseError);
    EXPECT_THROW(Tableau::from_text("1x\n"), ParseError);
    EXPECT_THROW(Tableau::from_text("1000\n0010\n"), InvariantViolation);
}

TEST(Tableau, PackedRowsRoundTrip) {
    Rng rng(47);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = oracle::uniform(rng, 1, 10);
        const auto tab = oracle::random_tableau(rng, n);
        const auto rows = tab.packed_rows();
        EXPECT_EQ(Tableau::from_packed(rows, n), tab);
        const Mask a = oracle::uniform(rng, 1, full_mask(n));
        EXPECT_EQ(packed_projected_rank(rows, n, a), tab.projected_rank(a));
        EXPECT_EQ(tab.projected_rank(a), rank(tab.project(a)));
        EXPECT_EQ(tab.project(a).cols(), 2 * mask_size(a));
    }
}

TEST(Tableau, RankVectorOffsetsEntropy) {
    const auto ghz = examples::ghz4();
    const auto r = rank_vector(ghz);
    for (Mask a = 1; a < 16; ++a) {
        EXPECT_EQ(r[a], ghz.entropy(a) + mask_size(a));
    }
}

TEST(Tableau, EntropyMatchesStateVectorSimulation) {
    Rng rng(53);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = oracle::uniform(rng, 1, 5);
        const auto gates = oracle::random_circuit(rng, n, oracle::uniform(rng, 0, 30));
        const auto tab = oracle::run_circuit(Tableau::zero_state(n), gates);
        auto psi = oracle::StateVector::zero(n);
        oracle::run_circuit(psi, gates);
        for (Mask a = 1; a <= full_mask(n); ++a) {
            ASSERT_EQ(tab.entropy(a), psi.entropy(a)) << "n=" << n << " A=" << mask_label(a);
        }
    }
}

TEST(Tableau, GraphStateMatchesAmplitudes) {
    Rng rng(59);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = oracle::uniform(rng, 1, 6);
        const auto g = oracle::random_graph(rng, n);
        const auto psi = oracle::StateVector::graph_state(g);
        const auto tab = Tableau::from_graph(g);
        for (Mask a = 1; a <= full_mask(n); ++a) {
            ASSERT_EQ(tab.entropy(a), psi.entropy(a)) << to_graph6(g);
        }
    }
}

TEST(Tableau, SameGroupIgnoresGeneratorChoice) {
    const auto t = tableau_of({"11" "00", "00" "11"});
    EXPECT_TRUE(t.same_group(tableau_of({"11" "11", "00" "11"})));
    EXPECT_FALSE(t.same_group(Tableau::zero_state(2)));
    EXPECT_FALSE(t.same_group(Tableau::zero_state(3)));
}

TEST(Tableau, ComplementSymmetryProperty) {
    const auto r = oracle::check_complement_symmetry(303, 10000);
    EXPECT_TRUE(r.ok()) << r.first_failure;
    EXPECT_EQ(r.cases, 10000u);
}

TEST(Tableau, AdjacencyEntropyProperty) {
    const auto r = oracle::check_tableau_vs_adjacency(404, 10000);
    EXPECT_TRUE(r.ok()) << r.first_failure;
    EXPECT_EQ(r.cases, 10000u);
}

}  // namespace
}  // namespace stabmmi
