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
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subsched {

bool Mapping::is_bijection() const {
    std::vector<bool> used(pos.size(), false);
    for (uint32_t p : pos) {
        if (p >= pos.size() || used[p]) {
            return false;
        }
        used[p] = true;
    }
    return true;
}

std::vector<Vertex> Mapping::order() const {
    std::vector<Vertex> out(pos.size());
    for (Vertex v = 0; v < pos.size(); v++) {
        out[pos[v]] = v;
    }
    return out;
}

Mapping Mapping::identity(size_t n) {
    Mapping m;
    m.pos.resize(n);
    std::iota(m.pos.begin(), m.pos.end(), 0);
    return m;
}

Mapping Mapping::from_order(const std::vector<Vertex> &order) {
    Mapping m;
    m.pos.resize(order.size());
    for (uint32_t p = 0; p < order.size(); p++) {
        m.pos[order[p]] = p;
    }
    return m;
}

MapperKind parse_mapper_kind(const std::string &name) {
    if (name == "natural") return MapperKind::natural;
    if (name == "random") return MapperKind::random;
    if (name == "mincut") return MapperKind::mincut;
    throw std::invalid_argument("unknown mapper '" + name + "' (expected natural, random, mincut)");
}

std::string mapper_kind_name(MapperKind kind) {
    switch (kind) {
        case MapperKind::natural:
            return "natural";
        case MapperKind::random:
            return "random";
        case MapperKind::mincut:
            return "mincut";
    }
    return "?";
}

Mapping basic_mapping(const Graph &g, MapperKind kind, uint64_t seed) {
    Mapping m = Mapping::identity(g.num_vertices());
    if (kind == MapperKind::random) {
        Rng rng(derive_seed(seed, 0x3A9));
        shuffle(m.pos, rng);
    } else if (kind != MapperKind::natural) {
        throw std::invalid_argument("basic_mapping supports natural and random only");
    }
    return m;
}

namespace {

struct DisjointSets {
    std::vector<uint32_t> parent;
    std::vector<uint32_t> size;

    void reset(size_t n) {
        parent.resize(n);
        size.assign(n, 1);
        std::iota(parent.begin(), parent.end(), 0);
    }
    uint32_t find(uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size[a] < size[b]) {
            std::swap(a, b);
        }
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

// Reusable buffers for contraction runs.
struct KargerScratch {
    DisjointSets sets;
    std::vector<uint32_t> perm;
};

// Contracts random edges (lazy Fisher-Yates over edge indices) until two
// super-vertices remain; returns the number of crossing edges.
size_t contract(const Graph &g, uint64_t run_seed, KargerScratch &s) {
    size_t n = g.num_vertices();
    const auto &edges = g.edges();
    size_t m = edges.size();
    s.sets.reset(n);
    s.perm.resize(m);
    std::iota(s.perm.begin(), s.perm.end(), 0);
    Rng rng(run_seed);
    size_t components = n;
    for (size_t k = 0; components > 2 && k < m; k++) {
        size_t j = uniform_int(rng, k, m - 1);
        std::swap(s.perm[k], s.perm[j]);
        const Edge &e = edges[s.perm[k]];
        if (s.sets.unite(e.a, e.b)) {
            components--;
        }
    }
    size_t crossing = 0;
    for (const auto &e : edges) {
        crossing += s.sets.find(e.a) != s.sets.find(e.b);
    }
    return crossing;
}

CutResult collect(const Graph &g, KargerScratch &s, size_t cut_size) {
    CutResult r;
    r.cut_size = cut_size;
    uint32_t root0 = s.sets.find(0);
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        r.sides[s.sets.find(v) == root0 ? 0 : 1].push_back(v);
    }
    for (const auto &e : g.edges()) {
        if (s.sets.find(e.a) != s.sets.find(e.b)) {
            r.cut_edges.push_back(e);
        }
    }
    return r;
}

void check_cut_input(const Graph &g) {
    if (g.num_vertices() < 2) {
        throw std::invalid_argument("min cut needs at least two vertices");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("min cut input must be connected");
    }
}

}  // namespace

CutResult karger_contract_once(const Graph &g, uint64_t run_seed) {
    check_cut_input(g);
    KargerScratch s;
    size_t cut = contract(g, run_seed, s);
    return collect(g, s, cut);
}

CutResult karger_min_cut(const Graph &g, size_t repetitions, uint64_t seed, Exec exec) {
    check_cut_input(g);
    if (repetitions == 0) {
        throw std::invalid_argument("repetitions must be at least 1");
    }
    // A connected graph has no cut smaller than 1, so once some run hits 1
    // every later run index can be skipped without changing the winner.
    constexpr size_t none = std::numeric_limits<size_t>::max();
    size_t best_size = none;
    size_t best_run = none;

    if (exec == Exec::serial) {
        KargerScratch s;
        for (size_t r = 0; r < repetitions; r++) {
            size_t cut = contract(g, derive_seed(seed, r), s);
            if (cut < best_size) {
                best_size = cut;
                best_run = r;
                if (cut == 1) {
                    break;
                }
            }
        }
    } else {
        std::atomic<size_t> first_unit_run{none};
#pragma omp parallel
        {
            KargerScratch s;
            size_t local_size = none;
            size_t local_run = none;
#pragma omp for schedule(dynamic, 4)
            for (int64_t ri = 0; ri < (int64_t)repetitions; ri++) {
                size_t r = (size_t)ri;
                if (r > first_unit_run.load(std::memory_order_relaxed)) {
                    continue;
                }
                size_t cut = contract(g, derive_seed(seed, r), s);
                if (cut < local_size || (cut == local_size && r < local_run)) {
                    local_size = cut;
                    local_run = r;
                }
                if (cut == 1) {
                    size_t cur = first_unit_run.load();
                    while (r < cur && !first_unit_run.compare_exchange_weak(cur, r)) {
                    }
                }
            }
#pragma omp critical(subsched_karger_reduce)
            {
                if (local_size < best_size || (local_size == best_size && local_run < best_run)) {
                    best_size = local_size;
                    best_run = local_run;
                }
            }
        }
    }
    KargerScratch s;
    size_t cut = contract(g, derive_seed(seed, best_run), s);
    return collect(g, s, cut);
}

size_t auto_karger_repetitions(size_t n, double c, size_t budget) {
    if (n < 2) {
        return 1;
    }
    double want = std::ceil(c * (double)n * (double)n * std::log((double)n));
    size_t reps = want < 1.0 ? 1 : (size_t)want;
    size_t per_run = std::max<size_t>(1, n - 2);
    size_t cap = std::max<size_t>(1, budget / per_run);
    return std::min(reps, cap);
}

Mapping mincut_mapping(const Graph &g, const MincutOptions &options, MincutTrace *trace) {
    size_t n = g.num_vertices();
    std::vector<std::vector<Vertex>> work(n);
    for (Vertex v = 0; v < n; v++) {
        work[v] = g.neighbors(v);
    }
    std::vector<bool> placed(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<bool> seen(n, false);

    auto drop_edge = [&](Vertex a, Vertex b) {
        auto &la = work[a];
        la.erase(std::lower_bound(la.begin(), la.end(), b));
        auto &lb = work[b];
        lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
    };

    // Every cut splits a component and every placement removes vertices, so
    // 2n iterations always suffice; the cap only guards against bugs.
    size_t iteration_cap = 4 * n + 8;
    Vertex first_unplaced = 0;
    for (size_t iteration = 0; order.size() < n; iteration++) {
        while (placed[first_unplaced]) {
            first_unplaced++;
        }
        if (iteration >= iteration_cap) {
            for (Vertex v = first_unplaced; v < n; v++) {
                if (!placed[v]) {
                    placed[v] = true;
                    order.push_back(v);
                }
            }
            if (trace) {
                trace->budget_hit = true;
            }
            break;
        }

        std::vector<Vertex> comp{first_unplaced};
        seen[first_unplaced] = true;
        for (size_t k = 0; k < comp.size(); k++) {
            for (Vertex w : work[comp[k]]) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        for (Vertex v : comp) {
            seen[v] = false;
        }
        std::sort(comp.begin(), comp.end());

        if (comp.size() <= 2) {
            for (Vertex v : comp) {
                placed[v] = true;
                order.push_back(v);
                for (Vertex w : std::vector<Vertex>(work[v])) {
                    drop_edge(v, w);
                }
            }
            continue;
        }

        std::vector<Edge> local_edges;
        for (size_t i = 0; i < comp.size(); i++) {
            for (Vertex w : work[comp[i]]) {
                if (w > comp[i]) {
                    auto j = std::lower_bound(comp.begin(), comp.end(), w) - comp.begin();
                    local_edges.push_back({(Vertex)i, (Vertex)j});
                }
            }
        }
        Graph sub = Graph::from_edges(comp.size(), std::move(local_edges));
        size_t reps = options.repetitions ? options.repetitions
                                          : auto_karger_repetitions(comp.size(), options.c, options.budget);
        CutResult cut = karger_min_cut(sub, reps, derive_seed(options.seed, iteration), options.exec);
        for (auto &e : cut.cut_edges) {
            e = {comp[e.a], comp[e.b]};
            drop_edge(e.a, e.b);
        }
        if (trace) {
            for (auto &side : cut.sides) {
                for (auto &v : side) {
                    v = comp[v];
                }
            }
            trace->cuts.push_back({comp, std::move(cut)});
        }
    }
    return Mapping::from_order(order);
}

Mapping make_mapping(const Graph &g, MapperKind kind, uint64_t seed, const MincutOptions &mincut) {
    if (kind == MapperKind::mincut) {
        MincutOptions opts = mincut;
        opts.seed = seed;
        return mincut_mapping(g, opts);
    }
    return basic_mapping(g, kind, seed);
}

}  // namespace subsched
