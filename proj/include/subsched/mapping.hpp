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

#ifndef SUBSCHED_MAPPING_HPP
#define SUBSCHED_MAPPING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "subsched/common.hpp"
#include "subsched/graph.hpp"

namespace subsched {

/// Vertex-to-row-position assignment. pos[v] is the qubit position of vertex v.
struct Mapping {
    std::vector<uint32_t> pos;

    size_t size() const {
        return pos.size();
    }
    bool is_bijection() const;
    /// Inverse view: the vertex sitting at each position.
    std::vector<Vertex> order() const;

    static Mapping identity(size_t n);
    static Mapping from_order(const std::vector<Vertex> &order);

    bool operator==(const Mapping &) const = default;
};

enum class MapperKind { natural, random, mincut };

MapperKind parse_mapper_kind(const std::string &name);
std::string mapper_kind_name(MapperKind kind);

/// natural -> identity, random -> seeded uniform permutation.
Mapping basic_mapping(const Graph &g, MapperKind kind, uint64_t seed = 0);

struct CutResult {
    size_t cut_size = 0;
    std::vector<Edge> cut_edges;
    /// sides[0] holds vertex 0.
    std::array<std::vector<Vertex>, 2> sides;
};

/// One randomized contraction run: contract uniformly random edges until two
/// super-vertices remain. Requires a connected graph with n >= 2.
CutResult karger_contract_once(const Graph &g, uint64_t run_seed);

/// Best of `repetitions` independent contraction runs. Run r draws from
/// derive_seed(seed, r); the winner is the smallest (cut_size, r). The
/// parallel and serial paths return identical results.
CutResult karger_min_cut(const Graph &g, size_t repetitions, uint64_t seed, Exec exec = Exec::parallel);

/// ceil(c * n^2 * ln n), capped so that runs * (n - 2) contractions stay within `budget`.
size_t auto_karger_repetitions(size_t n, double c = 1.0, size_t budget = 100000);

struct MincutOptions {
    size_t repetitions = 0;  // 0 selects auto_karger_repetitions per cut
    double c = 1.0;
    size_t budget = 100000;
    uint64_t seed = 0;
    Exec exec = Exec::parallel;
};

/// Records every cut made by mincut_mapping, in global vertex ids.
struct MincutTrace {
    struct Step {
        std::vector<Vertex> component;
        CutResult cut;
    };
    std::vector<Step> cuts;
    bool budget_hit = false;
};

/// Recursive min-cut placement. The working graph's first connected
/// component (the one holding the smallest unplaced vertex) is split by a
/// Karger min cut whenever it has more than two vertices; a component with
/// two or fewer vertices is appended to the next free row positions in
/// ascending vertex order and removed.
Mapping mincut_mapping(const Graph &g, const MincutOptions &options = {}, MincutTrace *trace = nullptr);

Mapping make_mapping(const Graph &g, MapperKind kind, uint64_t seed, const MincutOptions &mincut = {});

}  // namespace subsched

#endif
