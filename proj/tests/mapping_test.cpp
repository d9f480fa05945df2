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

#include "subsched/mapping.hpp"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "subsched/scheduler.hpp"
#include "subsched/stabilizer.hpp"
#include "subsched/verify.hpp"

using namespace subsched;

namespace {

Graph random_connected(uint64_t seed, size_t lo, size_t hi) {
    Rng rng(seed);
    size_t n = uniform_int(rng, lo, hi);
    size_t m = uniform_int(rng, n - 1, n * (n - 1) / 2);
    return generate({GraphKind::gnm, n, m, seed, 100000});
}

size_t depth(const Graph &g, const Mapping &m) {
    auto plan = reduce_generators(g, greedy_maximal_independent_set(g));
    auto blocks = build_blocks(g, plan.measured, m);
    return schedule_first_fit(blocks).tocks();
}

}  // namespace

TEST(mapping, natural_is_identity) {
    Graph g = generate({GraphKind::path, 5});
    ASSERT_EQ(basic_mapping(g, MapperKind::natural).pos, (std::vector<uint32_t>{0, 1, 2, 3, 4}));
}

TEST(mapping, random_is_seeded_bijection) {
    Graph g = generate({GraphKind::path, 50});
    Mapping a = basic_mapping(g, MapperKind::random, 7);
    ASSERT_TRUE(a.is_bijection());
    ASSERT_EQ(a, basic_mapping(g, MapperKind::random, 7));
    ASSERT_NE(a, basic_mapping(g, MapperKind::random, 8));
    ASSERT_EQ(Mapping::from_order(a.order()), a);
}

TEST(mapping, kind_names) {
    for (auto k : {MapperKind::natural, MapperKind::random, MapperKind::mincut}) {
        ASSERT_EQ(parse_mapper_kind(mapper_kind_name(k)), k);
    }
    ASSERT_THROW(parse_mapper_kind("spiral"), std::invalid_argument);
}

TEST(karger, small_examples) {
    ASSERT_EQ(karger_min_cut(generate({GraphKind::path, 3}), 20, 0).cut_size, 1u);
    ASSERT_EQ(karger_min_cut(generate({GraphKind::complete, 4}), 50, 0).cut_size, 3u);
    ASSERT_EQ(karger_min_cut(generate({GraphKind::complete, 3}), 20, 0).cut_size, 2u);
    Graph two = generate({GraphKind::path, 2});
    CutResult r = karger_min_cut(two, 1, 0);
    ASSERT_EQ(r.cut_size, 1u);
    ASSERT_EQ(r.sides[0], (std::vector<Vertex>{0}));
    ASSERT_EQ(r.sides[1], (std::vector<Vertex>{1}));
}

TEST(karger, rejects_bad_input) {
    ASSERT_THROW(karger_min_cut(generate({GraphKind::path, 1}), 1, 0), std::invalid_argument);
    std::vector<std::pair<int64_t, int64_t>> e{{0, 1}};
    ASSERT_THROW(karger_min_cut(Graph::from_edge_list(3, e), 5, 0), std::invalid_argument);
}

TEST(karger, result_is_consistent_cut) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        Graph g = random_connected(seed, 2, 12);
        CutResult r = karger_contract_once(g, seed);
        ASSERT_FALSE(r.sides[0].empty());
        ASSERT_FALSE(r.sides[1].empty());
        ASSERT_EQ(r.sides[0].size() + r.sides[1].size(), g.num_vertices());
        ASSERT_EQ(r.sides[0].front(), 0u);
        std::vector<int> side(g.num_vertices(), 0);
        for (Vertex v : r.sides[1]) {
            side[v] = 1;
        }
        size_t crossing = 0;
        for (const auto &e : g.edges()) {
            crossing += side[e.a] != side[e.b];
        }
        ASSERT_EQ(crossing, r.cut_size);
        ASSERT_EQ(r.cut_edges.size(), r.cut_size);
        ASSERT_GE(r.cut_size, oracle_min_cut(g));
    }
}

TEST(karger, matches_oracle_with_enough_repetitions) {
    size_t hits = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        Graph g = random_connected(seed, 2, 10);
        size_t n = g.num_vertices();
        size_t reps = std::max<size_t>(1, (size_t)std::ceil((double)(n * n) * std::log((double)n)));
        hits += karger_min_cut(g, reps, seed).cut_size == oracle_min_cut(g);
    }
    ASSERT_GE(hits, 99u);
}

TEST(karger, serial_and_parallel_agree) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        Graph g = random_connected(seed, 3, 40);
        CutResult a = karger_min_cut(g, 200, seed, Exec::serial);
        CutResult b = karger_min_cut(g, 200, seed, Exec::parallel);
        ASSERT_EQ(a.cut_size, b.cut_size);
        ASSERT_EQ(a.sides, b.sides);
        ASSERT_EQ(a.cut_edges, b.cut_edges);
    }
}

TEST(karger, auto_repetitions) {
    ASSERT_EQ(auto_karger_repetitions(2), 3u);
    ASSERT_EQ(auto_karger_repetitions(10), 231u);
    // Budget caps total contractions at roughly budget / (n - 2) runs.
    ASSERT_EQ(auto_karger_repetitions(1000, 1.0, 100000), 100u);
    ASSERT_EQ(auto_karger_repetitions(1), 1u);
}

TEST(mincut_mapping, bijection_and_determinism) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        Graph g = random_connected(seed, 1 + (seed == 0), 60);
        MincutOptions o;
        o.seed = seed;
        Mapping m = mincut_mapping(g, o);
        ASSERT_TRUE(m.is_bijection());
        ASSERT_EQ(m.size(), g.num_vertices());
        ASSERT_EQ(m, mincut_mapping(g, o));
        o.exec = Exec::serial;
        ASSERT_EQ(m, mincut_mapping(g, o));
    }
}

TEST(mincut_mapping, p3_reaches_minimal_depth) {
    Graph p3 = generate({GraphKind::path, 3});
    std::vector<Vertex> order{0, 1, 2};
    size_t best = SIZE_MAX;
    do {
        best = std::min(best, depth(p3, Mapping::from_order(order)));
    } while (std::next_permutation(order.begin(), order.end()));
    ASSERT_EQ(best, 1u);
    ASSERT_EQ(depth(p3, mincut_mapping(p3)), best);
}

TEST(mincut_mapping, path_pieces_stay_contiguous) {
    Graph g = generate({GraphKind::path, 40});
    MincutTrace trace;
    Mapping m = mincut_mapping(g, {}, &trace);
    ASSERT_FALSE(trace.budget_hit);
    ASSERT_FALSE(trace.cuts.empty());
    for (const auto &step : trace.cuts) {
        ASSERT_EQ(step.cut.cut_size, 1u);
        for (const auto &side : step.cut.sides) {
            for (size_t k = 1; k < side.size(); k++) {
                ASSERT_EQ(side[k], side[k - 1] + 1);
            }
        }
    }
    for (Vertex v = 0; v + 1 < 40; v++) {
        uint32_t a = m.pos[v];
        uint32_t b = m.pos[v + 1];
        ASSERT_EQ(a > b ? a - b : b - a, 1u);
    }
}

TEST(mincut_mapping, path_depth_two) {
    for (size_t n : {3, 10, 100}) {
        Graph g = generate({GraphKind::path, n});
        size_t d = depth(g, mincut_mapping(g));
        ASSERT_LE(d, 2u) << n;
        if (n >= 10) {
            ASSERT_EQ(d, 2u);
        }
    }
}
