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

#ifndef SUBSCHED_SCHEDULER_HPP
#define SUBSCHED_SCHEDULER_HPP

#include <span>
#include <string>
#include <vector>

#include "subsched/graph.hpp"
#include "subsched/mapping.hpp"

namespace subsched {

/// Ancilla bus segment [left, right] (inclusive qubit positions) needed to
/// measure generator `gen`.
struct AncillaBlock {
    Vertex gen = 0;
    uint32_t left = 0;
    uint32_t right = 0;

    bool operator==(const AncillaBlock &) const = default;
};

using Round = std::vector<AncillaBlock>;

/// Rounds in execution order; each round is one Tock of concurrent parity checks.
struct Schedule {
    std::vector<Round> rounds;

    size_t tocks() const {
        return rounds.size();
    }
    size_t block_count() const;
};

enum class SchedulerKind { paper, first_fit };

SchedulerKind parse_scheduler_kind(const std::string &name);
std::string scheduler_kind_name(SchedulerKind kind);

/// One block per measured generator; the span covers the generator's vertex
/// and all its neighbors under the mapping.
std::vector<AncillaBlock> build_blocks(const Graph &g, std::span<const Vertex> measured, const Mapping &m);

/// Sorts by (right, left, gen) and sweeps the list once per round, taking a
/// block whenever its left end lies strictly beyond every right end already
/// taken in that round. Repeats until every block is placed.
Schedule schedule_paper_greedy(std::span<const AncillaBlock> blocks);

/// Sorts by (left, right, gen) and puts each block in the lowest-index round
/// it fits in. Uses exactly max-overlap-depth rounds.
Schedule schedule_first_fit(std::span<const AncillaBlock> blocks);

Schedule run_scheduler(SchedulerKind kind, std::span<const AncillaBlock> blocks);

/// Maximum number of blocks covering any single position; no schedule can
/// use fewer rounds.
size_t overlap_lower_bound(std::span<const AncillaBlock> blocks);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    size_t lower_bound = 0;
};

/// Checks that every block appears exactly once (with matching span) and
/// that blocks sharing a round are strictly disjoint.
ValidationReport validate_schedule(const Schedule &schedule, std::span<const AncillaBlock> blocks);

}  // namespace subsched

#endif
