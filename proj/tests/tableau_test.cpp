// Copyright 2026 The subsched Authors
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

#include "subsched/tableau.hpp"

#include "gtest/gtest.h"
#include "subsched/stabilizer.hpp"

using namespace subsched;

namespace {

PauliString random_pauli(Rng &rng, size_t n) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, (Pauli)uniform_int(rng, 0, 3));
    }
    p.set_negative(uniform_int(rng, 0, 1));
    return p;
}

PauliString ps(const char *text) {
    return PauliString::from_string(text);
}

}  // namespace

TEST(multiply, single_qubit_table) {
    ASSERT_EQ(multiply_reference(ps("X"), ps("X")), ps("+I"));
    ASSERT_EQ(multiply_reference(ps("Y"), ps("Y")), ps("+I"));
    ASSERT_EQ(multiply_reference(ps("-Z"), ps("Z")), ps("-I"));
    ASSERT_THROW(multiply_reference(ps("X"), ps("Z")), std::invalid_argument);
    ASSERT_THROW(multiply_packed(ps("X"), ps("Z")), std::invalid_argument);
}

TEST(multiply, phase_self_test) {
    // XZ = -iY, so (X x X)(Z x Z) = (-i)^2 YY = -YY, and ZX = iY gives the same.
    ASSERT_EQ(multiply_reference(ps("XX"), ps("ZZ")), ps("-YY"));
    ASSERT_EQ(multiply_reference(ps("ZZ"), ps("XX")), ps("-YY"));
    ASSERT_EQ(multiply_packed(ps("XX"), ps("ZZ")), ps("-YY"));
    ASSERT_EQ(multiply_packed(ps("XZ"), ps("ZX")), ps("+YY"));
    ASSERT_EQ(multiply_packed(ps("XYZ"), ps("YXZ")), multiply_reference(ps("XYZ"), ps("YXZ")));
}

TEST(multiply, packed_matches_reference_property) {
    Rng rng(5);
    size_t checked = 0;
    for (int trial = 0; trial < 4000; trial++) {
        size_t n = 1 + uniform_int(rng, 0, 150);
        PauliString a = random_pauli(rng, n);
        PauliString b = random_pauli(rng, n);
        if (!a.commutes_with(b)) {
            ASSERT_THROW(multiply_packed(a, b), std::invalid_argument);
            continue;
        }
        checked++;
        ASSERT_EQ(multiply_packed(a, b), multiply_reference(a, b));
    }
    ASSERT_GT(checked, 1000u);
}

TEST(tableau, init_from_plan) {
    Graph p3 = generate({GraphKind::path, 3});
    std::vector<Vertex> set{0, 2};
    Tableau t = tableau_init(reduce_generators(p3, set));
    ASSERT_EQ(t.row(0).str(), "+XII");
    ASSERT_EQ(t.row(1).str(), "+IZI");
    ASSERT_EQ(t.row(2).str(), "+IIX");
    ASSERT_EQ(t.rank(), 3u);
    ASSERT_TRUE(t.rows_commute());
}

TEST(tableau, project_p3) {
    Graph p3 = generate({GraphKind::path, 3});
    std::vector<Vertex> set{0, 2};
    Tableau t = Tableau::from_plan(reduce_generators(p3, set));
    ASSERT_TRUE(t.contains(ps("XZI")));
    ASSERT_FALSE(t.contains(ps("ZXZ")));
    ASSERT_EQ(t.project(ps("ZXZ")), Tableau::Outcome::projected);
    ASSERT_EQ(t.row(0).str(), "+ZXZ");
    ASSERT_EQ(t.row(1).str(), "+XZI");
    ASSERT_EQ(t.row(2).str(), "+XIX");
    ASSERT_TRUE(stabilizer_groups_equal(t, stabilizer_generators(p3)));
    ASSERT_EQ(t.project(ps("IZX")), Tableau::Outcome::determined_plus);
    ASSERT_EQ(t.project(ps("-IZX")), Tableau::Outcome::determined_minus);
}

TEST(tableau, contains_tracks_sign) {
    std::vector<PauliString> rows{ps("XX"), ps("-ZZ")};
    Tableau t = Tableau::from_rows(rows);
    ASSERT_TRUE(t.contains(ps("XX")));
    ASSERT_FALSE(t.contains(ps("-XX")));
    ASSERT_TRUE(t.contains(ps("+YY")));  // XX * -ZZ = -(-YY)
    ASSERT_TRUE(t.contains(ps("II")));
    ASSERT_FALSE(t.contains(ps("XI")));
    std::vector<PauliString> q{ps("YY"), ps("-YY"), ps("ZZ")};
    ASSERT_EQ(t.contains_all(q), (std::vector<bool>{true, false, false}));
}

TEST(tableau, group_equality_ignores_presentation) {
    Graph g = generate({GraphKind::gnm, 12, 20, 3});
    auto gens = stabilizer_generators(g);
    std::vector<PauliString> rows = gens;
    std::reverse(rows.begin(), rows.end());
    for (size_t k = 1; k < rows.size(); k++) {
        rows[k] = multiply_packed(rows[k], rows[k - 1]);
    }
    Tableau t = Tableau::from_rows(rows);
    ASSERT_TRUE(stabilizer_groups_equal(t, gens));

    rows[3].set_negative(!rows[3].negative());
    ASSERT_FALSE(stabilizer_groups_equal(Tableau::from_rows(rows), gens));

    std::vector<PauliString> partial(gens.begin(), gens.end() - 1);
    partial.push_back(gens.front());
    ASSERT_FALSE(stabilizer_groups_equal(Tableau::from_rows(partial), gens));
}

TEST(tableau, serial_and_parallel_projection_agree) {
    Graph g = generate({GraphKind::gnm, 320, 2000, 9});
    auto plan = reduce_generators(g, greedy_maximal_independent_set(g));
    Tableau a = Tableau::from_plan(plan);
    Tableau b = Tableau::from_plan(plan);
    for (Vertex v : plan.measured) {
        PauliString p = stabilizer_generator(g, v);
        ASSERT_EQ(a.project(p, Exec::serial), b.project(p, Exec::parallel));
    }
    for (size_t r = 0; r < g.num_vertices(); r++) {
        ASSERT_EQ(a.row(r), b.row(r));
    }
    ASSERT_TRUE(stabilizer_groups_equal(a, stabilizer_generators(g)));
}

TEST(tableau, random_projections_keep_invariants) {
    Rng rng(11);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + uniform_int(rng, 0, 70);
        ReductionPlan plan;
        plan.init_basis.assign(n, InitBasis::zero);
        Tableau t = Tableau::from_plan(plan);
        for (int k = 0; k < 30; k++) {
            PauliString p = random_pauli(rng, n);
            auto outcome = t.project(p);
            if (outcome == Tableau::Outcome::projected || outcome == Tableau::Outcome::determined_plus) {
                ASSERT_TRUE(t.contains(p));
            } else {
                PauliString neg = p;
                neg.set_negative(!neg.negative());
                ASSERT_TRUE(t.contains(neg));
            }
            ASSERT_EQ(t.rank(), n);
            ASSERT_TRUE(t.rows_commute());
        }
    }
}
