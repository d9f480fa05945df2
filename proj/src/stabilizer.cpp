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

#include <algorithm>
#include <numeric>

namespace subsched {

PauliString stabilizer_generator(const Graph &g, Vertex v) {
    PauliString p(g.num_vertices());
    p.set(v, Pauli::X);
    for (Vertex w : neighborhood(g, v)) {
        p.set(w, Pauli::Z);
    }
    return p;
}

std::vector<PauliString> stabilizer_generators(const Graph &g) {
    std::vector<PauliString> out;
    out.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        out.push_back(stabilizer_generator(g, v));
    }
    return out;
}

std::vector<Vertex> greedy_maximal_independent_set(const Graph &g, MisOrder order, uint64_t seed) {
    size_t n = g.num_vertices();
    std::vector<Vertex> visit(n);
    std::iota(visit.begin(), visit.end(), 0);
    if (order == MisOrder::degree_ascending) {
        std::stable_sort(visit.begin(), visit.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) < g.degree(b);
        });
    } else {
        Rng rng(derive_seed(seed, 0x4D15));
        shuffle(visit, rng);
    }
    std::vector<bool> blocked(n, false);
    std::vector<Vertex> out;
    for (Vertex v : visit) {
        if (blocked[v]) {
            continue;
        }
        out.push_back(v);
        blocked[v] = true;
        for (Vertex w : g.neighbors(v)) {
            blocked[w] = true;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ReductionPlan::init_string() const {
    std::string s;
    for (InitBasis b : init_basis) {
        s.push_back(b == InitBasis::plus ? '+' : '0');
    }
    return s;
}

ReductionPlan reduce_generators(const Graph &g, std::span<const Vertex> independent_set) {
    size_t n = g.num_vertices();
    std::vector<bool> in_set(n, false);
    for (Vertex v : independent_set) {
        if (v >= n) {
            throw ReductionError("vertex " + std::to_string(v) + " out of range");
        }
        if (in_set[v]) {
            throw ReductionError("vertex " + std::to_string(v) + " listed twice");
        }
        in_set[v] = true;
    }
    for (const auto &e : g.edges()) {
        if (in_set[e.a] && in_set[e.b]) {
            throw ReductionError(
                "set is not independent: " + std::to_string(e.a) + " and " + std::to_string(e.b) + " are adjacent");
        }
    }
    ReductionPlan plan;
    plan.init_basis.assign(n, InitBasis::zero);
    for (Vertex v = 0; v < n; v++) {
        if (in_set[v]) {
            plan.independent_set.push_back(v);
            plan.init_basis[v] = InitBasis::plus;
            continue;
        }
        const auto &nbrs = g.neighbors(v);
        bool covered = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) {
            return in_set[w];
        });
        if (!covered) {
            throw ReductionError(
                "set is not maximal: vertex " + std::to_string(v) + " has no neighbor in the set");
        }
        plan.measured.push_back(v);
    }
    return plan;
}

}  // namespace subsched
