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

#ifndef SUBSCHED_STABILIZER_HPP
#define SUBSCHED_STABILIZER_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsched/graph.hpp"
#include "subsched/pauli.hpp"

namespace subsched {

/// Graph-state generator of vertex v: X on v, Z on every neighbor of v.
PauliString stabilizer_generator(const Graph &g, Vertex v);
std::vector<PauliString> stabilizer_generators(const Graph &g);

enum class MisOrder { degree_ascending, seeded_random };

/// Greedy maximal independent set. Vertices are visited in the given order
/// (degree ascending with index tie-break, or a seeded shuffle) and taken
/// whenever no neighbor was taken before. Result sorted ascending.
std::vector<Vertex> greedy_maximal_independent_set(
    const Graph &g, MisOrder order = MisOrder::degree_ascending, uint64_t seed = 0);

enum class InitBasis { plus, zero };

/// Initial product state plus the generators that still need a parity
/// measurement. Qubits in the independent set start in |+>, all others in |0>.
struct ReductionPlan {
    std::vector<Vertex> independent_set;
    std::vector<InitBasis> init_basis;
    std::vector<Vertex> measured;

    /// "+0+" style rendering of init_basis.
    std::string init_string() const;
};

class ReductionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Rejects sets that are not independent (names an adjacent pair) or not
/// maximal (names a vertex with no neighbor in the set).
ReductionPlan reduce_generators(const Graph &g, std::span<const Vertex> independent_set);

}  // namespace subsched

#endif
