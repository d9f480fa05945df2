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

#ifndef SUBSCHED_VERIFY_HPP
#define SUBSCHED_VERIFY_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "subsched/graph.hpp"
#include "subsched/scheduler.hpp"
#include "subsched/stabilizer.hpp"
#include "subsched/tableau.hpp"

namespace subsched {

struct VerifyReport {
    bool pass = false;
    size_t checked_generators = 0;
    std::optional<std::string> failure;
};

struct VerifyOptions {
    Exec exec = Exec::parallel;
    /// Re-check rank and pairwise commutation after every projection.
    bool check_invariants = false;
};

/// Simulates the compiled procedure on a stabilizer tableau: start from the
/// plan's product state, project onto +1 of every scheduled generator in
/// round order, then compare the resulting group against the graph-state
/// generators. Coverage problems (a measured generator missing from the
/// schedule, a stray or repeated generator) are reported as failures.
VerifyReport verify_compilation(const Graph &g, const ReductionPlan &plan, const Schedule &schedule,
                                const VerifyOptions &options = {});

/// Exact minimum number of rounds of pairwise-disjoint blocks, by
/// backtracking colouring of the conflict graph. At most 12 blocks.
size_t oracle_min_rounds(std::span<const AncillaBlock> blocks);

/// Exact global min cut by enumerating every bipartition. 2 <= n <= 12.
size_t oracle_min_cut(const Graph &g);

class OracleRangeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace subsched

#endif
