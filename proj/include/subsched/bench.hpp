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

#ifndef SUBSCHED_BENCH_HPP
#define SUBSCHED_BENCH_HPP

#include <ostream>
#include <string>
#include <vector>

#include "subsched/compiler.hpp"

namespace subsched {

/// One CSV row per (instance, mapper, scheduler).
struct BenchRow {
    std::string graph_kind;
    size_t n = 0;
    size_t edge_count = 0;
    double density = 0.0;
    std::string mapper;
    std::string scheduler;
    uint64_t seed = 0;
    size_t mis_size = 0;
    size_t measured_count = 0;
    size_t tocks = 0;
    size_t lower_bound = 0;
    size_t tiles_reduced = 0;
    size_t volume = 0;
    double wall_time_ms = 0.0;
};

enum class BenchSuite { types, density, scaling };

BenchSuite parse_bench_suite(const std::string &name);

struct BenchConfig {
    BenchSuite suite = BenchSuite::types;
    std::vector<std::string> kinds;   // types: path, star, tree, complete
    std::vector<size_t> sizes;        // types, scaling
    size_t density_n = 100;           // density
    std::vector<double> densities;    // density
    std::vector<std::string> families;  // scaling: sparse, dense
    size_t seeds = 0;                 // instances per grid point; 0 = suite default
    uint64_t base_seed = 0;
    std::vector<MapperKind> mappers{MapperKind::mincut, MapperKind::random};
    std::vector<SchedulerKind> schedulers{SchedulerKind::paper, SchedulerKind::first_fit};
    size_t mincut_max_n = 300;  // mincut rows are skipped above this size
    MincutOptions mincut;
    VerifyPolicy verify = VerifyPolicy::automatic;
    bool timing = false;  // when off, wall_time_ms is written as 0 so output is reproducible
    int threads = 0;      // 0 = OpenMP default
};

/// Fills unset grid fields with the suite defaults.
BenchConfig with_defaults(BenchConfig config);

/// Parses "10,50,100", "a..b" (1-2-5 steps inside [a, b]) or "a..b:s" (step s).
std::vector<size_t> parse_size_list(const std::string &spec);
std::vector<double> parse_density_list(const std::string &spec);

/// Instances are evaluated in parallel; rows come back in instance order.
std::vector<BenchRow> run_bench(const BenchConfig &config);

void write_csv_header(std::ostream &out);
void write_csv_row(std::ostream &out, const BenchRow &row);
void write_csv(std::ostream &out, const std::vector<BenchRow> &rows);

/// m for the scaling families: sparse = ceil(n log2 n), dense = ceil(n^2 / log2 n),
/// clamped to [n-1, n(n-1)/2].
size_t family_edge_count(const std::string &family, size_t n);

/// m = round(density * n(n-1)/2), clamped to [n-1, n(n-1)/2].
size_t density_edge_count(double density, size_t n);

}  // namespace subsched

#endif
