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

#include "subsched/stabilizer.hpp"

#include "gtest/gtest.h"

using namespace subsched;

namespace {

std::vector<std::string> strs(const std::vector<PauliString> &ps) {
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(p.str());
    }
    return out;
}

Graph random_connected(uint64_t seed, size_t max_n) {
    Rng rng(seed);
    size_t n = 1 + uniform_int(rng, 0, max_n - 1);
    size_t m = n < 2 ? 0 : uniform_int(rng, n - 1, n * (n - 1) / 2);
    return generate({GraphKind::gnm, n, m, seed, 100000});
}

}  // namespace

TEST(pauli, string_round_trip) {
    auto p = PauliString::from_string("-XYZI");
    ASSERT_EQ(p.str(), "-XYZI");
    ASSERT_TRUE(p.negative());
    ASSERT_EQ(PauliString::from_string("XZ").str(), "+XZ");
    ASSERT_EQ(p.support(), (std::vector<size_t>{0, 1, 2}));
    ASSERT_THROW(PauliString::from_string("XQ"), std::invalid_argument);
}

TEST(pauli, commutation) {
    ASSERT_FALSE(PauliString::from_string("X").commutes_with(PauliString::from_string("Z")));
    ASSERT_TRUE(PauliString::from_string("XX").commutes_with(PauliString::from_string("ZZ")));
    ASSERT_TRUE(PauliString::from_string("XZI").commutes_with(PauliString::from_string("ZXZ")));
}

TEST(stabilizer, generators) {
    ASSERT_EQ(strs(stabilizer_generators(generate({GraphKind::path, 3}))),
              (std::vector<std::string>{"+XZI", "+ZXZ", "+IZX"}));
    ASSERT_EQ(strs(stabilizer_generators(generate({GraphKind::path, 1}))), (std::vector<std::string>{"+X"}));
    ASSERT_EQ(strs(stabilizer_generators(generate({GraphKind::star, 3}))),
              (std::vector<std::string>{"+XZZ", "+ZXI", "+ZIX"}));
}

TEST(stabilizer, generators_pairwise_commute) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        auto gens = stabilizer_generators(random_connected(seed, 15));
        for (size_t a = 0; a < gens.size(); a++) {
            for (size_t b = 0; b < gens.size(); b++) {
                ASSERT_TRUE(gens[a].commutes_with(gens[b]));
            }
        }
    }
}

TEST(stabilizer, greedy_mis_examples) {
    ASSERT_EQ(greedy_maximal_independent_set(generate({GraphKind::path, 3})), (std::vector<Vertex>{0, 2}));
    ASSERT_EQ(greedy_maximal_independent_set(generate({GraphKind::star, 5})), (std::vector<Vertex>{1, 2, 3, 4}));
    ASSERT_EQ(greedy_maximal_independent_set(generate({GraphKind::complete, 4})).size(), 1u);
    ASSERT_EQ(greedy_maximal_independent_set(generate({GraphKind::path, 1})), (std::vector<Vertex>{0}));
}

TEST(stabilizer, greedy_mis_is_independent_and_maximal_property) {
    for (uint64_t seed = 0; seed < 1000; seed++) {
        Graph g = random_connected(seed, 40);
        for (MisOrder order : {MisOrder::degree_ascending, MisOrder::seeded_random}) {
            auto mis = greedy_maximal_independent_set(g, order, seed);
            ASSERT_GE(mis.size(), 1u);
            ASSERT_LE(mis.size(), g.num_vertices());
            // reduce_generators re-checks independence and maximality.
            ReductionPlan plan = reduce_generators(g, mis);
            ASSERT_EQ(plan.measured.size(), g.num_vertices() - mis.size());
            ASSERT_EQ(mis, greedy_maximal_independent_set(g, order, seed));
        }
    }
}

TEST(stabilizer, complete_and_star_sizes) {
    for (size_t n : {2, 5, 30}) {
        ASSERT_EQ(greedy_maximal_independent_set(generate({GraphKind::complete, n})).size(), 1u);
        ASSERT_EQ(greedy_maximal_independent_set(generate({GraphKind::star, n})).size(), n - 1);
    }
}

TEST(stabilizer, reduce_generators_examples) {
    Graph p3 = generate({GraphKind::path, 3});
    std::vector<Vertex> set{0, 2};
    ReductionPlan plan = reduce_generators(p3, set);
    ASSERT_EQ(plan.init_string(), "+0+");
    ASSERT_EQ(plan.measured, (std::vector<Vertex>{1}));

    Graph star = generate({GraphKind::star, 5});
    std::vector<Vertex> leaves{1, 2, 3, 4};
    ASSERT_EQ(reduce_generators(star, leaves).measured, (std::vector<Vertex>{0}));

    Graph k4 = generate({GraphKind::complete, 4});
    std::vector<Vertex> zero{0};
    ASSERT_EQ(reduce_generators(k4, zero).measured, (std::vector<Vertex>{1, 2, 3}));
}

TEST(stabilizer, reduce_generators_rejects_with_witness) {
    Graph p3 = generate({GraphKind::path, 3});
    std::vector<Vertex> adjacent{0, 1};
    try {
        reduce_generators(p3, adjacent);
        FAIL();
    } catch (const ReductionError &e) {
        EXPECT_NE(std::string(e.what()).find("0 and 1 are adjacent"), std::string::npos);
    }
    std::vector<Vertex> small{0};
    try {
        reduce_generators(p3, small);
        FAIL();
    } catch (const ReductionError &e) {
        EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
    }
}

TEST(stabilizer, plus_qubits_already_stabilized) {
    // Symbolic check: for v in the set, g_v has X on a |+> qubit and Z only
    // on |0> qubits, so the product state is a +1 eigenstate of g_v.
    for (uint64_t seed = 0; seed < 200; seed++) {
        Graph g = random_connected(seed, 25);
        ReductionPlan plan = reduce_generators(g, greedy_maximal_independent_set(g));
        for (Vertex v : plan.independent_set) {
            PauliString gv = stabilizer_generator(g, v);
            for (size_t q = 0; q < g.num_vertices(); q++) {
                if (gv[q] == Pauli::X) {
                    ASSERT_EQ(plan.init_basis[q], InitBasis::plus);
                } else if (gv[q] == Pauli::Z) {
                    ASSERT_EQ(plan.init_basis[q], InitBasis::zero);
                }
            }
        }
    }
}
