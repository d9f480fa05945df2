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

#include "subsched/scheduler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace subsched {

size_t Schedule::block_count() const {
    size_t total = 0;
    for (const auto &r : rounds) {
        total += r.size();
    }
    return total;
}

SchedulerKind parse_scheduler_kind(const std::string &name) {
    if (name == "paper" || name == "paper-greedy") return SchedulerKind::paper;
    if (name == "first-fit" || name == "first_fit") return SchedulerKind::first_fit;
    throw std::invalid_argument("unknown scheduler '" + name + "' (expected paper, first-fit)");
}

std::string scheduler_kind_name(SchedulerKind kind) {
    return kind == SchedulerKind::paper ? "paper" : "first-fit";
}

std::vector<AncillaBlock> build_blocks(const Graph &g, std::span<const Vertex> measured, const Mapping &m) {
    if (m.size() != g.num_vertices()) {
        throw std::invalid_argument("mapping size does not match the graph");
    }
    std::vector<AncillaBlock> out;
    out.reserve(measured.size());
    for (Vertex v : measured) {
        uint32_t lo = m.pos[v];
        uint32_t hi = m.pos[v];
        for (Vertex w : neighborhood(g, v)) {
            lo = std::min(lo, m.pos[w]);
            hi = std::max(hi, m.pos[w]);
        }
        out.push_back({v, lo, hi});
    }
    return out;
}

Schedule schedule_paper_greedy(std::span<const AncillaBlock> blocks) {
    std::vector<AncillaBlock> pending(blocks.begin(), blocks.end());
    std::sort(pending.begin(), pending.end(), [](const AncillaBlock &a, const AncillaBlock &b) {
        if (a.right != b.right) return a.right < b.right;
        if (a.left != b.left) return a.left < b.left;
        return a.gen < b.gen;
    });
    Schedule s;
    std::vector<AncillaBlock> rest;
    while (!pending.empty()) {
        Round round;
        rest.clear();
        // Sorted by right end, so the last taken block has the largest right end.
        int64_t reach = -1;
        for (const auto &b : pending) {
            if ((int64_t)b.left > reach) {
                round.push_back(b);
                reach = b.right;
            } else {
                rest.push_back(b);
            }
        }
        s.rounds.push_back(std::move(round));
        pending.swap(rest);
    }
    return s;
}

Schedule schedule_first_fit(std::span<const AncillaBlock> blocks) {
    std::vector<AncillaBlock> sorted(blocks.begin(), blocks.end());
    std::sort(sorted.begin(), sorted.end(), [](const AncillaBlock &a, const AncillaBlock &b) {
        if (a.left != b.left) return a.left < b.left;
        if (a.right != b.right) return a.right < b.right;
        return a.gen < b.gen;
    });
    Schedule s;
    std::vector<uint32_t> reach;
    for (const auto &b : sorted) {
        size_t r = 0;
        while (r < reach.size() && reach[r] >= b.left) {
            r++;
        }
        if (r == reach.size()) {
            s.rounds.emplace_back();
            reach.push_back(0);
        }
        s.rounds[r].push_back(b);
        reach[r] = b.right;
    }
    return s;
}

Schedule run_scheduler(SchedulerKind kind, std::span<const AncillaBlock> blocks) {
    return kind == SchedulerKind::paper ? schedule_paper_greedy(blocks) : schedule_first_fit(blocks);
}

size_t overlap_lower_bound(std::span<const AncillaBlock> blocks) {
    // A block closes at right + 1; closings sort before openings at the same
    // coordinate so touching-but-disjoint blocks never count together.
    std::vector<std::pair<int64_t, int>> events;
    events.reserve(2 * blocks.size());
    for (const auto &b : blocks) {
        events.emplace_back((int64_t)b.left, -1);
        events.emplace_back((int64_t)b.right + 1, +1);
    }
    std::sort(events.begin(), events.end(), [](const auto &x, const auto &y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second > y.second;
    });
    int64_t depth = 0;
    int64_t best = 0;
    for (const auto &[at, kind] : events) {
        depth -= kind;
        best = std::max(best, depth);
    }
    return (size_t)best;
}

ValidationReport validate_schedule(const Schedule &schedule, std::span<const AncillaBlock> blocks) {
    ValidationReport report;
    report.lower_bound = overlap_lower_bound(blocks);
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    std::map<Vertex, AncillaBlock> expected;
    for (const auto &b : blocks) {
        if (!expected.emplace(b.gen, b).second) {
            fail("generator g" + std::to_string(b.gen) + " appears twice in the block list");
        }
    }
    std::map<Vertex, size_t> seen;
    for (size_t r = 0; r < schedule.rounds.size(); r++) {
        const auto &round = schedule.rounds[r];
        for (const auto &b : round) {
            auto it = expected.find(b.gen);
            if (it == expected.end()) {
                fail("round " + std::to_string(r) + ": generator g" + std::to_string(b.gen) + " is not a measured generator");
            } else if (!(it->second == b)) {
                fail("round " + std::to_string(r) + ": generator g" + std::to_string(b.gen) + " has span [" +
                     std::to_string(b.left) + ", " + std::to_string(b.right) + "], expected [" +
                     std::to_string(it->second.left) + ", " + std::to_string(it->second.right) + "]");
            }
            if (seen[b.gen]++) {
                fail("round " + std::to_string(r) + ": generator g" + std::to_string(b.gen) + " scheduled more than once");
            }
        }
        std::vector<AncillaBlock> by_left(round.begin(), round.end());
        std::sort(by_left.begin(), by_left.end(), [](const AncillaBlock &a, const AncillaBlock &b) {
            return a.left < b.left || (a.left == b.left && a.right < b.right);
        });
        for (size_t k = 1; k < by_left.size(); k++) {
            const auto &a = by_left[k - 1];
            const auto &b = by_left[k];
            if (a.right >= b.left) {
                fail("round " + std::to_string(r) + ": g" + std::to_string(a.gen) + " [" + std::to_string(a.left) +
                     ", " + std::to_string(a.right) + "] overlaps g" + std::to_string(b.gen) + " [" +
                     std::to_string(b.left) + ", " + std::to_string(b.right) + "]");
            }
        }
    }
    for (const auto &[gen, b] : expected) {
        if (!seen.count(gen)) {
            fail("generator g" + std::to_string(gen) + " is never scheduled");
        }
    }
    return report;
}

}  // namespace subsched
