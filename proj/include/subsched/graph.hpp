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

#ifndef SUBSCHED_GRAPH_HPP
#define SUBSCHED_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subsched/common.hpp"

namespace subsched {

/// Rejected graph input. `row`/`col` locate the first offending matrix
/// entry or edge-list pair when there is one.
class GraphError : public std::invalid_argument {
   public:
    explicit GraphError(const std::string &what, std::optional<size_t> row = {}, std::optional<size_t> col = {})
        : std::invalid_argument(what), row(row), col(col) {
    }
    std::optional<size_t> row;
    std::optional<size_t> col;
};

/// Undirected edge, normalized so that a < b.
struct Edge {
    Vertex a;
    Vertex b;
    auto operator<=>(const Edge &) const = default;
};

/// Undirected simple graph over the dense vertex set 0..n-1. Immutable once
/// built; adjacency lists are sorted ascending.
class Graph {
   public:
    Graph() = default;

    static Graph from_adjacency_matrix(const std::vector<std::vector<int>> &rows);
    static Graph from_edge_list(size_t n, std::span<const std::pair<int64_t, int64_t>> pairs);
    static Graph from_edges(size_t n, std::vector<Edge> edges);

    size_t num_vertices() const {
        return adj_.size();
    }
    size_t num_edges() const {
        return edges_.size();
    }
    size_t degree(Vertex v) const {
        return adj_[v].size();
    }
    const std::vector<Vertex> &neighbors(Vertex v) const {
        return adj_[v];
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    bool has_edge(Vertex a, Vertex b) const;

    std::vector<std::vector<uint8_t>> adjacency_matrix() const;

    /// Subgraph induced on `vertices`; local vertex i corresponds to vertices[i].
    Graph induced_subgraph(std::span<const Vertex> vertices) const;

    /// Original input labels, one per vertex. Empty when the input already used 0..n-1.
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Graph &other) const {
        return adj_ == other.adj_;
    }

   private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

struct GraphStats {
    size_t n = 0;
    size_t edge_count = 0;
    size_t max_degree = 0;
    double density = 0.0;
};

/// ngbr(v). Throws GraphError when v is out of range.
const std::vector<Vertex> &neighborhood(const Graph &g, Vertex v);

/// Density is 2|E| / (n(n-1)); reported as 0 for a single vertex.
GraphStats graph_stats(const Graph &g);

bool is_connected(const Graph &g);

/// Components in order of their smallest vertex; each component sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

enum class GraphKind { path, star, complete, random_tree, gnm };

GraphKind parse_graph_kind(const std::string &name);
std::string graph_kind_name(GraphKind kind);

struct GenerateParams {
    GraphKind kind = GraphKind::path;
    size_t n = 1;
    size_t m = 0;  // gnm only
    uint64_t seed = 0;
    size_t max_attempts = 1000;  // gnm connectivity resampling
};

/// Thrown when a connected gnm sample cannot be drawn within the retry budget.
class GenerationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Deterministic for a fixed seed. Star graphs use vertex 0 as the hub.
/// gnm samples uniformly among graphs with n vertices and m edges and
/// resamples until the result is connected.
Graph generate(const GenerateParams &params);

/// Uniform sample of m distinct edges over n vertices; not necessarily connected.
Graph sample_gnm(size_t n, size_t m, Rng &rng);

}  // namespace subsched

#endif
