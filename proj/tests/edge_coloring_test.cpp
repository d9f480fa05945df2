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

#include "subsched/edge_coloring.hpp"

#include "gtest/gtest.h"

using namespace subsched;

namespace {

size_t max_degree(const Graph &g) {
    return graph_stats(g).max_degree;
}

}  // namespace

TEST(edge_coloring, named_families) {
    for (size_t n : {2, 3, 10, 51}) {
        Graph path = generate({GraphKind::path, n});
        EdgeColoring c = edge_coloring(path);
        ASSERT_TRUE(is_proper_edge_coloring(path, c));
        ASSERT_EQ(c.num_colors, n == 2 ? 1u : 2u);

        Graph star = generate({GraphKind::star, n});
        c = edge_coloring(star);
        ASSERT_TRUE(is_proper_edge_coloring(star, c));
        ASSERT_EQ(c.num_colors, n - 1);
    }
}

TEST(edge_coloring, complete_graphs) {
    for (size_t n = 2; n <= 40; n++) {
        Graph k = generate({GraphKind::complete, n});
        EdgeColoring c = edge_coloring(k);
        ASSERT_TRUE(is_proper_edge_coloring(k, c));
        ASSERT_EQ(c.num_colors, n % 2 == 0 ? n - 1 : n) << n;
    }
}

TEST(edge_coloring, trees_use_max_degree) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        Graph t = generate({GraphKind::random_tree, 5 + seed * 2, 0, seed});
        EdgeColoring c = edge_coloring(t);
        ASSERT_TRUE(is_proper_edge_coloring(t, c));
        ASSERT_EQ(c.num_colors, max_degree(t));
    }
}

TEST(edge_coloring, random_graphs_within_vizing) {
    for (uint64_t seed = 0; seed < 60; seed++) {
        Rng rng(seed);
        size_t n = uniform_int(rng, 2, 60);
        size_t m = uniform_int(rng, n - 1, n * (n - 1) / 2);
        Graph g = generate({GraphKind::gnm, n, m, seed});
        size_t delta = max_degree(g);
        EdgeColoring c = edge_coloring(g);
        ASSERT_TRUE(is_proper_edge_coloring(g, c));
        ASSERT_GE(c.num_colors, delta);
        ASSERT_LE(c.num_colors, delta + 1);

        EdgeColoring mg = misra_gries_edge_coloring(g);
        ASSERT_TRUE(is_proper_edge_coloring(g, mg));
        ASSERT_LE(mg.num_colors, delta + 1);
    }
}

TEST(edge_coloring, kempe_reports_failure) {
    // Odd complete graphs are class 2, so a palette of size delta must fail.
    Graph k5 = generate({GraphKind::complete, 5});
    ASSERT_FALSE(kempe_edge_coloring(k5, 4).has_value());
    auto ok = kempe_edge_coloring(k5, 5);
    ASSERT_TRUE(ok.has_value());
    ASSERT_TRUE(is_proper_edge_coloring(k5, *ok));
}

TEST(edge_coloring, checker_rejects_conflicts) {
    Graph p3 = generate({GraphKind::path, 3});
    EdgeColoring bad{{0, 0}, 1};
    ASSERT_FALSE(is_proper_edge_coloring(p3, bad));
    EdgeColoring short_list{{0}, 1};
    ASSERT_FALSE(is_proper_edge_coloring(p3, short_list));
    Graph single = generate({GraphKind::path, 1});
    ASSERT_EQ(edge_coloring(single).num_colors, 0u);
}
