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

#include "subsched/compiler.hpp"

#include "subsched/edge_coloring.hpp"

namespace subsched {

VerifyPolicy parse_verify_policy(const std::string &name) {
    if (name == "auto") return VerifyPolicy::automatic;
    if (name == "always") return VerifyPolicy::always;
    if (name == "never") return VerifyPolicy::never;
    throw std::invalid_argument("unknown verify policy '" + name + "' (expected auto, always, never)");
}

std::string verify_policy_name(VerifyPolicy policy) {
    switch (policy) {
        case VerifyPolicy::automatic:
            return "auto";
        case VerifyPolicy::always:
            return "always";
        case VerifyPolicy::never:
            return "never";
    }
    return "?";
}

size_t space_tiles(size_t n, size_t mis_size, Layout layout) {
    if (mis_size > n) {
        throw std::invalid_argument(
            "independent set size " + std::to_string(mis_size) + " exceeds n=" + std::to_string(n));
    }
    return layout == Layout::full ? 4 * n : 4 * n - mis_size;
}

size_t spacetime_volume(const CompilationResult &result) {
    return result.tiles_reduced * result.tocks;
}

CompilationResult compile(const Graph &g, const CompileOptions &options) {
    if (g.num_vertices() == 0 || !is_connected(g)) {
        throw CompileError(CompileError::Kind::disconnected, "input graph is not connected");
    }
    auto mis = greedy_maximal_independent_set(g, options.mis_order, derive_seed(options.seed, 1));
    ReductionPlan plan = reduce_generators(g, mis);
    MincutOptions mincut = options.mincut;
    mincut.exec = options.exec;
    Mapping mapping = make_mapping(g, options.mapper, derive_seed(options.seed, 2), mincut);
    return finish_compilation(g, std::move(plan), std::move(mapping), options);
}

CompilationResult finish_compilation(const Graph &g, ReductionPlan plan, Mapping mapping,
                                     const CompileOptions &options) {
    size_t n = g.num_vertices();
    CompilationResult r;
    r.plan = std::move(plan);
    r.mapping = std::move(mapping);
    if (r.mapping.size() != n || !r.mapping.is_bijection()) {
        throw CompileError(CompileError::Kind::invalid_schedule, "mapping is not a bijection onto the row");
    }

    r.blocks = build_blocks(g, r.plan.measured, r.mapping);
    r.schedule = run_scheduler(options.scheduler, r.blocks);

    ValidationReport check = validate_schedule(r.schedule, r.blocks);
    if (!check.ok) {
        throw CompileError(CompileError::Kind::invalid_schedule, "schedule failed validation: " + check.violations[0]);
    }

    size_t mis_size = r.plan.independent_set.size();
    r.tocks = r.schedule.tocks();
    r.lower_bound = check.lower_bound;
    r.tiles_full = space_tiles(n, mis_size, Layout::full);
    r.tiles_reduced = space_tiles(n, mis_size, Layout::reduced);
    r.spacetime_volume = spacetime_volume(r);

    bool simulate = options.verify == VerifyPolicy::always ||
                    (options.verify == VerifyPolicy::automatic && n <= options.verify_cap);
    if (simulate) {
        VerifyOptions vo;
        vo.exec = options.exec;
        VerifyReport report = verify_compilation(g, r.plan, r.schedule, vo);
        if (!report.pass) {
            throw CompileError(CompileError::Kind::verification_failed,
                               "verification failed: " + report.failure.value_or("unknown"));
        }
        r.verified = true;
        r.verification = std::move(report);
    }
    return r;
}

CzBaseline cz_baseline_depth(const Graph &g) {
    EdgeColoring c = edge_coloring(g);
    return {c.num_colors, 2 * c.num_colors};
}

}  // namespace subsched
