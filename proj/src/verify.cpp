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

#include "subsched/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace subsched {

VerifyReport verify_compilation(const Graph &g, const ReductionPlan &plan, const Schedule &schedule,
                                const VerifyOptions &options) {
    VerifyReport report;
    size_t n = g.num_vertices();
    if (plan.init_basis.size() != n) {
        report.failure = "plan covers " + std::to_string(plan.init_basis.size()) + " qubits, graph has " +
                         std::to_string(n);
        return report;
    }

    std::set<Vertex> expected(plan.measured.begin(), plan.measured.end());
    std::set<Vertex> scheduled;
    std::optional<std::string> coverage;
    for (const auto &round : schedule.rounds) {
        for (const auto &b : round) {
            if (b.gen >= n) {
                report.failure = "scheduled generator g" + std::to_string(b.gen) + " is out of range";
                return report;
            }
            if (!scheduled.insert(b.gen).second && !coverage) {
                coverage = "generator g" + std::to_string(b.gen) + " is scheduled more than once";
            }
            if (!expected.count(b.gen) && !coverage) {
                coverage = "generator g" + std::to_string(b.gen) + " is scheduled but not in the measured list";
            }
        }
    }
    for (Vertex v : expected) {
        if (!scheduled.count(v) && !coverage) {
            coverage = "measured generator g" + std::to_string(v) + " is missing from the schedule";
        }
    }

    Tableau t = tableau_init(plan);
    for (const auto &round : schedule.rounds) {
        for (const auto &b : round) {
            auto outcome = t.project(stabilizer_generator(g, b.gen), options.exec);
            report.checked_generators++;
            if (outcome == Tableau::Outcome::determined_minus) {
                report.failure = "generator g" + std::to_string(b.gen) + " has a deterministic -1 outcome";
                return report;
            }
            if (options.check_invariants && (t.rank() != n || !t.rows_commute())) {
                report.failure = "tableau lost rank or commutation after projecting g" + std::to_string(b.gen);
                return report;
            }
        }
    }

    auto target = stabilizer_generators(g);
    auto found = t.contains_all(target);
    for (Vertex v = 0; v < n; v++) {
        if (!found[v]) {
            report.failure = "generator g" + std::to_string(v) + " does not stabilize the prepared state";
            if (coverage) {
                *report.failure += " (" + *coverage + ")";
            }
            return report;
        }
    }
    if (!stabilizer_groups_equal(t, target)) {
        report.failure = "prepared stabilizer group differs from the graph state";
        return report;
    }
    if (coverage) {
        report.failure = coverage;
        return report;
    }
    report.pass = true;
    return report;
}

size_t oracle_min_rounds(std::span<const AncillaBlock> blocks) {
    size_t k = blocks.size();
    if (k > 12) {
        throw OracleRangeError("oracle_min_rounds handles at most 12 blocks, got " + std::to_string(k));
    }
    if (k == 0) {
        return 0;
    }
    std::vector<std::vector<bool>> conflict(k, std::vector<bool>(k, false));
    for (size_t a = 0; a < k; a++) {
        for (size_t b = 0; b < k; b++) {
            conflict[a][b] = a != b && !(blocks[a].right < blocks[b].left || blocks[b].right < blocks[a].left);
        }
    }
    std::vector<int> color(k, -1);
    std::function<bool(size_t, int, int)> place = [&](size_t i, int used, int limit) -> bool {
        if (i == k) {
            return true;
        }
        // A fresh colour is only ever the next unused one.
        for (int c = 0; c <= std::min(used, limit - 1); c++) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; j++) {
                ok = !(conflict[i][j] && color[j] == c);
            }
            if (!ok) {
                continue;
            }
            color[i] = c;
            if (place(i + 1, std::max(used, c + 1), limit)) {
                return true;
            }
            color[i] = -1;
        }
        return false;
    };
    for (int limit = 1; limit <= (int)k; limit++) {
        if (place(0, 0, limit)) {
            return (size_t)limit;
        }
    }
    return k;
}

size_t oracle_min_cut(const Graph &g) {
    size_t n = g.num_vertices();
    if (n < 2 || n > 12) {
        throw OracleRangeError("oracle_min_cut handles 2 <= n <= 12, got n=" + std::to_string(n));
    }
    size_t best = g.num_edges();
    // Vertex n-1 stays on side 0; every other subset of the rest is side 1.
    for (uint32_t mask = 1; mask < (1u << (n - 1)); mask++) {
        size_t cut = 0;
        for (const auto &e : g.edges()) {
            bool sa = e.a < n - 1 && ((mask >> e.a) & 1);
            bool sb = e.b < n - 1 && ((mask >> e.b) & 1);
            cut += sa != sb;
        }
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace subsched
