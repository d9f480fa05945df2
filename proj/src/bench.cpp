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

#include "subsched/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subsched {

BenchSuite parse_bench_suite(const std::string &name) {
    if (name == "types") return BenchSuite::types;
    if (name == "density") return BenchSuite::density;
    if (name == "scaling") return BenchSuite::scaling;
    throw std::invalid_argument("unknown suite '" + name + "' (expected types, density, scaling)");
}

std::vector<size_t> parse_size_list(const std::string &spec) {
    std::vector<size_t> out;
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size() || v < 1) {
                throw std::invalid_argument("bad size '" + tok + "'");
            }
            out.push_back((size_t)v);
        }
    } else {
        std::string rest = spec.substr(dots + 2);
        size_t lo = std::stoull(spec.substr(0, dots));
        size_t step = 0;
        auto colon = rest.find(':');
        size_t hi = std::stoull(rest.substr(0, colon));
        if (colon != std::string::npos) {
            step = std::stoull(rest.substr(colon + 1));
            if (step == 0) {
                throw std::invalid_argument("range step must be positive");
            }
        }
        if (lo < 1 || hi < lo) {
            throw std::invalid_argument("bad size range '" + spec + "'");
        }
        if (step) {
            for (size_t v = lo; v <= hi; v += step) {
                out.push_back(v);
            }
        } else {
            out.push_back(lo);
            for (size_t decade = 1; decade <= hi; decade *= 10) {
                for (size_t mult : {1, 2, 5}) {
                    size_t v = decade * mult;
                    if (v > lo && v <= hi) {
                        out.push_back(v);
                    }
                }
            }
            if (out.back() != hi) {
                out.push_back(hi);
            }
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty size list");
    }
    return out;
}

std::vector<double> parse_density_list(const std::string &spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size() || !(v > 0.0) || v > 1.0) {
            throw std::invalid_argument("density '" + tok + "' outside (0, 1]");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty density grid");
    }
    return out;
}

BenchConfig with_defaults(BenchConfig c) {
    switch (c.suite) {
        case BenchSuite::types:
            if (c.kinds.empty()) c.kinds = {"path", "star", "tree", "complete"};
            if (c.sizes.empty()) c.sizes = parse_size_list("10..1000");
            if (c.seeds == 0) c.seeds = 1;
            break;
        case BenchSuite::density:
            if (c.densities.empty()) c.densities = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
            if (c.seeds == 0) c.seeds = 10;
            break;
        case BenchSuite::scaling:
            if (c.families.empty()) c.families = {"sparse", "dense"};
            if (c.sizes.empty()) c.sizes = parse_size_list("10..1000");
            if (c.seeds == 0) c.seeds = 10;
            break;
    }
    return c;
}

namespace {

size_t clamp_edges(double m, size_t n) {
    double lo = n >= 1 ? (double)(n - 1) : 0.0;
    double hi = (double)n * (double)(n - 1) / 2.0;
    return (size_t)std::clamp(m, lo, hi);
}

struct Instance {
    std::string kind;  // row label
    GenerateParams params;
};

// Grid points in the order given, each followed by its seeds.
std::vector<Instance> enumerate(const BenchConfig &c) {
    std::vector<Instance> out;
    auto add = [&](const std::string &label, GraphKind kind, size_t n, size_t m) {
        for (size_t s = 0; s < c.seeds; s++) {
            GenerateParams p;
            p.kind = kind;
            p.n = n;
            p.m = m;
            p.seed = c.base_seed + s;
            out.push_back({label, p});
        }
    };
    switch (c.suite) {
        case BenchSuite::types:
            for (const auto &k : c.kinds) {
                GraphKind kind = parse_graph_kind(k);
                if (kind == GraphKind::gnm) {
                    throw std::invalid_argument("the types suite takes path, star, tree or complete");
                }
                for (size_t n : c.sizes) {
                    add(graph_kind_name(kind), kind, n, 0);
                }
            }
            break;
        case BenchSuite::density:
            for (double d : c.densities) {
                add("gnm", GraphKind::gnm, c.density_n, density_edge_count(d, c.density_n));
            }
            break;
        case BenchSuite::scaling:
            for (const auto &f : c.families) {
                for (size_t n : c.sizes) {
                    add(f, GraphKind::gnm, n, family_edge_count(f, n));
                }
            }
            break;
    }
    return out;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<BenchRow> run_instance(const Instance &inst, const BenchConfig &c) {
    std::vector<BenchRow> rows;
    auto t0 = Clock::now();
    Graph g = generate(inst.params);
    GraphStats stats = graph_stats(g);
    auto mis = greedy_maximal_independent_set(g, MisOrder::degree_ascending, 0);
    ReductionPlan plan = reduce_generators(g, mis);
    double reduce_ms = ms_since(t0);

    for (MapperKind mapper : c.mappers) {
        if (mapper == MapperKind::mincut && g.num_vertices() > c.mincut_max_n) {
            continue;
        }
        auto t1 = Clock::now();
        MincutOptions mc = c.mincut;
        mc.exec = Exec::serial;  // instance-level parallelism already saturates the pool
        Mapping mapping = make_mapping(g, mapper, derive_seed(inst.params.seed, 2), mc);
        double map_ms = ms_since(t1);
        for (SchedulerKind sched : c.schedulers) {
            auto t2 = Clock::now();
            CompileOptions opts;
            opts.mapper = mapper;
            opts.scheduler = sched;
            opts.seed = inst.params.seed;
            opts.verify = c.verify;
            opts.exec = Exec::serial;
            CompilationResult r = finish_compilation(g, plan, mapping, opts);
            double sched_ms = ms_since(t2);

            BenchRow row;
            row.graph_kind = inst.kind;
            row.n = stats.n;
            row.edge_count = stats.edge_count;
            row.density = stats.density;
            row.mapper = mapper_kind_name(mapper);
            row.scheduler = scheduler_kind_name(sched);
            row.seed = inst.params.seed;
            row.mis_size = r.plan.independent_set.size();
            row.measured_count = r.plan.measured.size();
            row.tocks = r.tocks;
            row.lower_bound = r.lower_bound;
            row.tiles_reduced = r.tiles_reduced;
            row.volume = r.spacetime_volume;
            row.wall_time_ms = c.timing ? reduce_ms + map_ms + sched_ms : 0.0;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

size_t family_edge_count(const std::string &family, size_t n) {
    double nn = (double)n;
    double lg = n >= 2 ? std::log2(nn) : 1.0;
    if (family == "sparse") {
        return clamp_edges(std::ceil(nn * lg), n);
    }
    if (family == "dense") {
        return clamp_edges(std::ceil(nn * nn / lg), n);
    }
    throw std::invalid_argument("unknown family '" + family + "' (expected sparse, dense)");
}

size_t density_edge_count(double density, size_t n) {
    return clamp_edges(std::round(density * (double)n * (double)(n - 1) / 2.0), n);
}

std::vector<BenchRow> run_bench(const BenchConfig &config) {
    BenchConfig c = with_defaults(config);
    std::vector<Instance> instances = enumerate(c);
    std::vector<std::vector<BenchRow>> slots(instances.size());
    std::vector<std::string> errors(instances.size());

#ifdef _OPENMP
    int threads = c.threads > 0 ? c.threads : omp_get_max_threads();
#else
    int threads = 1;
#endif
    (void)threads;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int64_t i = 0; i < (int64_t)instances.size(); i++) {
        try {
            slots[i] = run_instance(instances[i], c);
        } catch (const std::exception &e) {
            errors[i] = e.what();
        }
    }
    std::vector<BenchRow> rows;
    for (size_t i = 0; i < instances.size(); i++) {
        if (!errors[i].empty()) {
            throw std::runtime_error("instance " + instances[i].kind + " n=" + std::to_string(instances[i].params.n) +
                                     " seed=" + std::to_string(instances[i].params.seed) + ": " + errors[i]);
        }
        for (auto &r : slots[i]) {
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

void write_csv_header(std::ostream &out) {
    out << "graph_kind,n,edge_count,density,mapper,scheduler,seed,mis_size,measured_count,tocks,lower_bound,"
           "tiles_reduced,volume,wall_time_ms\n";
}

void write_csv_row(std::ostream &out, const BenchRow &r) {
    char density[32];
    char wall[32];
    std::snprintf(density, sizeof density, "%.6f", r.density);
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_time_ms);
    out << r.graph_kind << ',' << r.n << ',' << r.edge_count << ',' << density << ',' << r.mapper << ','
        << r.scheduler << ',' << r.seed << ',' << r.mis_size << ',' << r.measured_count << ',' << r.tocks << ','
        << r.lower_bound << ',' << r.tiles_reduced << ',' << r.volume << ',' << wall << '\n';
}

void write_csv(std::ostream &out, const std::vector<BenchRow> &rows) {
    write_csv_header(out);
    for (const auto &r : rows) {
        write_csv_row(out, r);
    }
}

}  // namespace subsched
