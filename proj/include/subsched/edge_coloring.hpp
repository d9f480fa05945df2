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

#ifndef SUBSCHED_EDGE_COLORING_HPP
#define SUBSCHED_EDGE_COLORING_HPP

#include <optional>
#include <vector>

#include "subsched/graph.hpp"

namespace subsched {

/// color[i] is the colour of g.edges()[i].
struct EdgeColoring {
    std::vector<uint32_t> color;
    size_t num_colors = 0;
};

/// Greedy colouring of the edges in sorted order with a fixed palette of
/// `palette` colours. When both endpoints of an edge have no common free
/// colour, an alternating two-colour (Kempe) chain is swapped to create one.
/// Returns nullopt if some edge cannot be coloured that way.
std::optional<EdgeColoring> kempe_edge_coloring(const Graph &g, size_t palette);

/// Misra-Gries fan rotation; always succeeds with max_degree + 1 colours.
EdgeColoring misra_gries_edge_coloring(const Graph &g);

/// Tries max_degree colours with kempe_edge_coloring, falling back to
/// Misra-Gries. Never exceeds max_degree + 1 colours.
EdgeColoring edge_coloring(const Graph &g);

bool is_proper_edge_coloring(const Graph &g, const EdgeColoring &c);

}  // namespace subsched

#endif
