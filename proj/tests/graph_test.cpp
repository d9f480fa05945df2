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

#include "subsched/graph.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "subsched/graph_io.hpp"

using namespace subsched;

namespace {

std::vector<Edge> edges_of(const Graph &g) {
    return g.edges();
}

}  // namespace

TEST(graph, from_adjacency_matrix_path) {
    Graph g = Graph::from_adjacency_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    ASSERT_EQ(g.num_vertices(), 3u);
    ASSERT_EQ(edges_of(g), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(graph, from_adjacency_matrix_single_vertex) {
    Graph g = Graph::from_adjacency_matrix({{0}});
    ASSERT_EQ(g.num_vertices(), 1u);
    ASSERT_EQ(g.num_edges(), 0u);
}

TEST(graph, from_adjacency_matrix_rejects) {
    try {
        Graph::from_adjacency_matrix({{0, 1}, {1, 1}});
        FAIL() << "expected GraphError";
    } catch (const GraphError &e) {
        EXPECT_NE(std::string(e.what()).find("diagonal"), std::string::npos);
        EXPECT_EQ(e.row, 1u);
        EXPECT_EQ(e.col, 1u);
    }
    EXPECT_THROW(Graph::from_adjacency_matrix({{0, 1}, {0, 0}}), GraphError);
    EXPECT_THROW(Graph::from_adjacency_matrix({{0, 2}, {2, 0}}), GraphError);
    EXPECT_THROW(Graph::from_adjacency_matrix({{0, 1, 0}, {1, 0}}), GraphError);
    EXPECT_THROW(Graph::from_adjacency_matrix({}), GraphError);
}

TEST(graph, from_edge_list) {
    std::vector<std::pair<int64_t, int64_t>> p3{{0, 1}, {1, 2}};
    ASSERT_EQ(Graph::from_edge_list(3, p3), Graph::from_adjacency_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));

    std::vector<std::pair<int64_t, int64_t>> dup{{0, 1}, {1, 0}};
    ASSERT_EQ(Graph::from_edge_list(2, dup).num_edges(), 1u);

    std::vector<std::pair<int64_t, int64_t>> loop{{0, 0}};
    ASSERT_THROW(Graph::from_edge_list(2, loop), GraphError);
    std::vector<std::pair<int64_t, int64_t>> out{{0, 2}};
    ASSERT_THROW(Graph::from_edge_list(2, out), GraphError);
    std::vector<std::pair<int64_t, int64_t>> neg{{-1, 0}};
    ASSERT_THROW(Graph::from_edge_list(2, neg), GraphError);
}

TEST(graph, generate_named_families) {
    Graph star = generate({GraphKind::star, 5});
    ASSERT_EQ(edges_of(star), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}}));

    Graph k4 = generate({GraphKind::complete, 4});
    ASSERT_EQ(k4.num_edges(), 6u);
    ASSERT_DOUBLE_EQ(graph_stats(k4).density, 1.0);

    for (size_t n : {1, 2, 7, 40}) {
        Graph p = generate({GraphKind::path, n});
        ASSERT_EQ(p.num_edges(), n - 1);
        ASSERT_LE(graph_stats(p).max_degree, 2u);
        Graph k = generate({GraphKind::complete, n});
        ASSERT_EQ(k.num_edges(), n * (n - 1) / 2);
    }
}

TEST(graph, generate_gnm_density_point) {
    GenerateParams p{GraphKind::gnm, 100, 495, 17};
    Graph g = generate(p);
    ASSERT_EQ(g.num_edges(), 495u);
    ASSERT_TRUE(is_connected(g));
    ASSERT_NEAR(graph_stats(g).density, 0.1, 1e-12);
}

TEST(graph, generate_gnm_errors) {
    ASSERT_THROW(generate({GraphKind::gnm, 10, 8, 0}), GraphError);
    ASSERT_THROW(generate({GraphKind::gnm, 10, 46, 0}), GraphError);
    // A spanning tree drawn uniformly among all 9-edge graphs on 40 vertices
    // is connected with negligible probability.
    GenerateParams hard{GraphKind::gnm, 40, 39, 0, 5};
    ASSERT_THROW(generate(hard), GenerationError);
}

TEST(graph, generate_is_deterministic) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        GenerateParams p{GraphKind::gnm, 30, 60, seed};
        ASSERT_EQ(generate(p), generate(p));
        GenerateParams t{GraphKind::random_tree, 30, 0, seed};
        ASSERT_EQ(generate(t), generate(t));
    }
    ASSERT_FALSE(generate({GraphKind::gnm, 30, 60, 1}) == generate({GraphKind::gnm, 30, 60, 2}));
}

TEST(graph, random_tree_is_a_tree) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        size_t n = 1 + seed * 3;
        Graph t = generate({GraphKind::random_tree, n, 0, seed});
        ASSERT_EQ(t.num_edges(), n - 1);
        ASSERT_TRUE(is_connected(t));
    }
}

TEST(graph, neighborhood) {
    Graph p3 = generate({GraphKind::path, 3});
    ASSERT_EQ(neighborhood(p3, 1), (std::vector<Vertex>{0, 2}));
    Graph k4 = generate({GraphKind::complete, 4});
    ASSERT_EQ(neighborhood(k4, 0), (std::vector<Vertex>{1, 2, 3}));
    Graph star = generate({GraphKind::star, 5});
    ASSERT_EQ(neighborhood(star, 3), (std::vector<Vertex>{0}));
    ASSERT_THROW(neighborhood(p3, 3), GraphError);
}

TEST(graph, stats) {
    GraphStats p3 = graph_stats(generate({GraphKind::path, 3}));
    ASSERT_EQ(p3.n, 3u);
    ASSERT_EQ(p3.edge_count, 2u);
    ASSERT_EQ(p3.max_degree, 2u);
    ASSERT_DOUBLE_EQ(p3.density, 2.0 / 3.0);
    ASSERT_DOUBLE_EQ(graph_stats(generate({GraphKind::complete, 4})).density, 1.0);
    GraphStats star = graph_stats(generate({GraphKind::star, 5}));
    ASSERT_EQ(star.max_degree, 4u);
    ASSERT_DOUBLE_EQ(star.density, 0.4);
    ASSERT_EQ(graph_stats(generate({GraphKind::path, 1})).density, 0.0);
}

TEST(graph, connectivity) {
    ASSERT_TRUE(is_connected(generate({GraphKind::path, 3})));
    std::vector<std::pair<int64_t, int64_t>> one{{0, 1}};
    Graph split = Graph::from_edge_list(3, one);
    ASSERT_FALSE(is_connected(split));
    ASSERT_EQ(connected_components(split), (std::vector<std::vector<Vertex>>{{0, 1}, {2}}));
    ASSERT_TRUE(is_connected(generate({GraphKind::complete, 4})));
    ASSERT_TRUE(is_connected(generate({GraphKind::path, 1})));
}

TEST(graph, matrix_round_trip_property) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        Rng rng(seed);
        size_t n = 2 + uniform_int(rng, 0, 20);
        size_t m = uniform_int(rng, n - 1, n * (n - 1) / 2);
        Graph g = sample_gnm(n, m, rng);
        auto mat = g.adjacency_matrix();
        std::vector<std::vector<int>> rows(n);
        for (size_t i = 0; i < n; i++) {
            rows[i].assign(mat[i].begin(), mat[i].end());
            for (size_t j = 0; j < n; j++) {
                ASSERT_EQ(mat[i][j] == 1, g.has_edge((Vertex)i, (Vertex)j));
            }
        }
        ASSERT_EQ(Graph::from_adjacency_matrix(rows), g);
    }
}

TEST(graph, induced_subgraph) {
    Graph k4 = generate({GraphKind::complete, 4});
    std::vector<Vertex> keep{1, 3};
    Graph sub = k4.induced_subgraph(keep);
    ASSERT_EQ(sub.num_vertices(), 2u);
    ASSERT_EQ(sub.num_edges(), 1u);
}

TEST(graph_io, text_formats) {
    std::istringstream adj("# P3\n0 1 0\n1 0 1\n0 1 0\n");
    Graph a = parse_adjacency_matrix(adj);
    std::istringstream el("3 2\n0 1\n1 2\n");
    Graph b = parse_edge_list(el);
    ASSERT_EQ(a, b);

    std::ostringstream out;
    write_edge_list(out, a);
    std::istringstream back(out.str());
    ASSERT_EQ(parse_edge_list(back), a);

    std::ostringstream mat;
    write_adjacency_matrix(mat, a);
    ASSERT_EQ(mat.str(), "0 1 0\n1 0 1\n0 1 0\n");
}

TEST(graph_io, errors_carry_line_numbers) {
    std::istringstream asym("0 1 0\n0 0 1\n0 1 0\n");
    try {
        parse_adjacency_matrix(asym);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 1u);
        EXPECT_NE(std::string(e.what()).find("asymmetric"), std::string::npos);
    }
    std::istringstream count("3 3\n0 1\n1 2\n");
    ASSERT_THROW(parse_edge_list(count), ParseError);
    std::istringstream loop("3 1\n\n2 2\n");
    try {
        parse_edge_list(loop);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 3u);
    }
}

TEST(graph_io, json_with_labels) {
    auto j = nlohmann::json::parse(R"({"n": 3, "edges": [["a","b"],["b","c"]], "labels": ["a","b","c"]})");
    Graph g = graph_from_json(j);
    ASSERT_EQ(g, generate({GraphKind::path, 3}));
    ASSERT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
    auto out = graph_to_json(g);
    ASSERT_EQ(out.dump(), R"({"n":3,"edges":[[0,1],[1,2]],"labels":["a","b","c"]})");
    ASSERT_EQ(graph_from_json(nlohmann::json::parse(out.dump())), g);

    ASSERT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0,0]]})")), ParseError);
    ASSERT_THROW(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), ParseError);
}

TEST(graph_io, read_files_by_extension) {
    std::string dir = SUBSCHED_TEST_DATA;
    ASSERT_EQ(read_graph_file(dir + "/p3.adj"), generate({GraphKind::path, 3}));
    ASSERT_EQ(read_graph_file(dir + "/star5.edges"), generate({GraphKind::star, 5}));
    ASSERT_EQ(read_graph_file(dir + "/k4.json"), generate({GraphKind::complete, 4}));
    ASSERT_THROW(read_graph_file(dir + "/bad.adj"), ParseError);
    ASSERT_THROW(read_graph_file(dir + "/missing.adj"), ParseError);
}
