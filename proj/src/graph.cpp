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

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace subsched {

Graph Graph::from_adjacency_matrix(const std::vector<std::vector<int>> &rows) {
    size_t n = rows.size();
    if (n == 0) {
        throw GraphError("adjacency matrix is empty");
    }
    for (size_t i = 0; i < n; i++) {
        if (rows[i].size() != n) {
            throw GraphError(
                "adjacency matrix is not square: row " + std::to_string(i) + " has " +
                    std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n),
                i);
        }
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            int v = rows[i][j];
            std::string at = " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (v != 0 && v != 1) {
                throw GraphError("non-binary entry " + std::to_string(v) + at, i, j);
            }
            if (i == j && v != 0) {
                throw GraphError("nonzero diagonal entry" + at, i, j);
            }
            if (rows[j][i] != v) {
                throw GraphError("asymmetric entry" + at, i, j);
            }
            if (v == 1 && i < j) {
                edges.push_back({(Vertex)i, (Vertex)j});
            }
        }
    }
    return from_edges(n, std::move(edges));
}

Graph Graph::from_edge_list(size_t n, std::span<const std::pair<int64_t, int64_t>> pairs) {
    if (n == 0) {
        throw GraphError("graph must have at least one vertex");
    }
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (size_t k = 0; k < pairs.size(); k++) {
        auto [a, b] = pairs[k];
        if (a < 0 || b < 0 || (uint64_t)a >= n || (uint64_t)b >= n) {
            throw GraphError(
                "edge " + std::to_string(k) + " (" + std::to_string(a) + ", " + std::to_string(b) +
                    ") has a vertex outside 0.." + std::to_string(n - 1),
                k);
        }
        if (a == b) {
            throw GraphError("edge " + std::to_string(k) + " is a self-loop on vertex " + std::to_string(a), k);
        }
        edges.push_back({(Vertex)std::min(a, b), (Vertex)std::max(a, b)});
    }
    return from_edges(n, std::move(edges));
}

Graph Graph::from_edges(size_t n, std::vector<Edge> edges) {
    for (auto &e : edges) {
        if (e.a > e.b) {
            std::swap(e.a, e.b);
        }
        if (e.a == e.b || e.b >= n) {
            throw GraphError("invalid edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) + ")");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.adj_.resize(n);
    for (const auto &e : edges) {
        g.adj_[e.a].push_back(e.b);
        g.adj_[e.b].push_back(e.a);
    }
    for (auto &nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= adj_.size() || b >= adj_.size()) {
        return false;
    }
    const auto &nbrs = adj_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<std::vector<uint8_t>> Graph::adjacency_matrix() const {
    size_t n = num_vertices();
    std::vector<std::vector<uint8_t>> m(n, std::vector<uint8_t>(n, 0));
    for (const auto &e : edges_) {
        m[e.a][e.b] = 1;
        m[e.b][e.a] = 1;
    }
    return m;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
    std::vector<int64_t> local(num_vertices(), -1);
    for (size_t i = 0; i < vertices.size(); i++) {
        local[vertices[i]] = (int64_t)i;
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < vertices.size(); i++) {
        for (Vertex w : adj_[vertices[i]]) {
            int64_t j = local[w];
            if (j > (int64_t)i) {
                edges.push_back({(Vertex)i, (Vertex)j});
            }
        }
    }
    return from_edges(vertices.size(), std::move(edges));
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != num_vertices()) {
        throw GraphError(
            "label table has " + std::to_string(labels.size()) + " entries for " + std::to_string(num_vertices()) +
            " vertices");
    }
    labels_ = std::move(labels);
}

const std::vector<Vertex> &neighborhood(const Graph &g, Vertex v) {
    if (v >= g.num_vertices()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.num_vertices()));
    }
    return g.neighbors(v);
}

GraphStats graph_stats(const Graph &g) {
    GraphStats s;
    s.n = g.num_vertices();
    s.edge_count = g.num_edges();
    for (Vertex v = 0; v < s.n; v++) {
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    if (s.n >= 2) {
        s.density = 2.0 * (double)s.edge_count / ((double)s.n * (double)(s.n - 1));
    }
    return s;
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; start++) {
        if (seen[start]) {
            continue;
        }
        std::vector<Vertex> comp;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph &g) {
    if (g.num_vertices() == 0) {
        return false;
    }
    return connected_components(g).size() == 1;
}

GraphKind parse_graph_kind(const std::string &name) {
    if (name == "path") return GraphKind::path;
    if (name == "star") return GraphKind::star;
    if (name == "complete") return GraphKind::complete;
    if (name == "tree" || name == "random_tree") return GraphKind::random_tree;
    if (name == "gnm") return GraphKind::gnm;
    throw GraphError("unknown graph kind '" + name + "' (expected path, star, complete, tree, gnm)");
}

std::string graph_kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::path:
            return "path";
        case GraphKind::star:
            return "star";
        case GraphKind::complete:
            return "complete";
        case GraphKind::random_tree:
            return "tree";
        case GraphKind::gnm:
            return "gnm";
    }
    return "?";
}

namespace {

// Prufer-sequence decoding gives a uniformly random labeled tree.
Graph random_tree(size_t n, Rng &rng) {
    if (n <= 2) {
        std::vector<Edge> edges;
        if (n == 2) {
            edges.push_back({0, 1});
        }
        return Graph::from_edges(n, std::move(edges));
    }
    std::vector<Vertex> prufer(n - 2);
    for (auto &p : prufer) {
        p = (Vertex)uniform_int(rng, 0, n - 1);
    }
    std::vector<size_t> degree(n, 1);
    for (Vertex p : prufer) {
        degree[p]++;
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    size_t ptr = 0;
    while (degree[ptr] != 1) {
        ptr++;
    }
    size_t leaf = ptr;
    for (Vertex p : prufer) {
        edges.push_back({(Vertex)leaf, p});
        degree[p]--;
        if (degree[p] == 1 && p < ptr) {
            leaf = p;
        } else {
            ptr++;
            while (degree[ptr] != 1) {
                ptr++;
            }
            leaf = ptr;
        }
    }
    edges.push_back({(Vertex)leaf, (Vertex)(n - 1)});
    return Graph::from_edges(n, std::move(edges));
}

Edge pair_from_index(uint64_t idx, size_t n) {
    // Row-major enumeration of pairs a < b.
    uint64_t a = 0;
    uint64_t row = n - 1;
    while (idx >= row) {
        idx -= row;
        a++;
        row--;
    }
    return {(Vertex)a, (Vertex)(a + 1 + idx)};
}

}  // namespace

Graph sample_gnm(size_t n, size_t m, Rng &rng) {
    uint64_t total = (uint64_t)n * (n - 1) / 2;
    if (m > total) {
        throw GraphError("m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(total));
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    if (total <= (uint64_t)1 << 24) {
        // Partial Fisher-Yates over pair indices.
        std::vector<uint32_t> idx(total);
        std::iota(idx.begin(), idx.end(), 0);
        for (size_t k = 0; k < m; k++) {
            size_t j = uniform_int(rng, k, total - 1);
            std::swap(idx[k], idx[j]);
        }
        idx.resize(m);
        std::sort(idx.begin(), idx.end());
        Vertex a = 0;
        uint64_t row_start = 0;
        for (uint32_t i : idx) {
            while (i >= row_start + (n - 1 - a)) {
                row_start += n - 1 - a;
                a++;
            }
            edges.push_back({a, (Vertex)(a + 1 + (i - row_start))});
        }
    } else {
        std::unordered_set<uint64_t> chosen;
        while (chosen.size() < m) {
            uint64_t i = uniform_int(rng, 0, total - 1);
            if (chosen.insert(i).second) {
                edges.push_back(pair_from_index(i, n));
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(const GenerateParams &params) {
    size_t n = params.n;
    if (n == 0) {
        throw GraphError("graph must have at least one vertex");
    }
    std::vector<Edge> edges;
    switch (params.kind) {
        case GraphKind::path:
            for (Vertex v = 0; v + 1 < n; v++) {
                edges.push_back({v, v + 1});
            }
            return Graph::from_edges(n, std::move(edges));
        case GraphKind::star:
            for (Vertex v = 1; v < n; v++) {
                edges.push_back({0, v});
            }
            return Graph::from_edges(n, std::move(edges));
        case GraphKind::complete:
            for (Vertex a = 0; a < n; a++) {
                for (Vertex b = a + 1; b < n; b++) {
                    edges.push_back({a, b});
                }
            }
            return Graph::from_edges(n, std::move(edges));
        case GraphKind::random_tree: {
            Rng rng(derive_seed(params.seed, 0));
            return random_tree(n, rng);
        }
        case GraphKind::gnm: {
            uint64_t total = (uint64_t)n * (n - 1) / 2;
            if (params.m + 1 < n || params.m > total) {
                throw GraphError(
                    "gnm edge count m=" + std::to_string(params.m) + " outside [" + std::to_string(n - 1) + ", " +
                    std::to_string(total) + "] for n=" + std::to_string(n));
            }
            Rng rng(derive_seed(params.seed, 1));
            for (size_t attempt = 0; attempt < params.max_attempts; attempt++) {
                Graph g = sample_gnm(n, params.m, rng);
                if (is_connected(g)) {
                    return g;
                }
            }
            throw GenerationError(
                "no connected gnm(" + std::to_string(n) + ", " + std::to_string(params.m) + ") sample within " +
                std::to_string(params.max_attempts) + " attempts");
        }
    }
    throw GraphError("unknown graph kind");
}

}  // namespace subsched
