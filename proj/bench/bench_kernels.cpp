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

// Serial versus OpenMP kernels.

#include "benchmark/benchmark.h"
#include "subsched/bench.hpp"
#include "subsched/mapping.hpp"
#include "subsched/stabilizer.hpp"
#include "subsched/tableau.hpp"

using namespace subsched;

namespace {

Graph sparse_graph(size_t n) {
    return generate({GraphKind::gnm, n, family_edge_count("sparse", n), 1});
}

template <Exec exec>
void BM_karger(benchmark::State &state) {
    Graph g = sparse_graph((size_t)state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(karger_min_cut(g, 256, 7, exec).cut_size);
    }
}

template <Exec exec>
void BM_project_all(benchmark::State &state) {
    Graph g = sparse_graph((size_t)state.range(0));
    auto plan = reduce_generators(g, greedy_maximal_independent_set(g));
    std::vector<PauliString> gens;
    for (Vertex v : plan.measured) {
        gens.push_back(stabilizer_generator(g, v));
    }
    for (auto _ : state) {
        Tableau t = Tableau::from_plan(plan);
        for (const auto &p : gens) {
            benchmark::DoNotOptimize(t.project(p, exec));
        }
    }
}

template <Exec exec>
void BM_mincut_mapping(benchmark::State &state) {
    Graph g = sparse_graph((size_t)state.range(0));
    MincutOptions o;
    o.exec = exec;
    o.budget = 20000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mincut_mapping(g, o).pos.data());
    }
}

void BM_bench_suite(benchmark::State &state) {
    BenchConfig c;
    c.suite = BenchSuite::scaling;
    c.families = {"sparse"};
    c.sizes = {100, 200};
    c.seeds = 4;
    c.mappers = {MapperKind::random};
    c.verify = VerifyPolicy::always;
    c.threads = (int)state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_bench(c).size());
    }
}

}  // namespace

BENCHMARK(BM_karger<Exec::serial>)->Arg(64)->Arg(256);
BENCHMARK(BM_karger<Exec::parallel>)->Arg(64)->Arg(256);
BENCHMARK(BM_project_all<Exec::serial>)->Arg(256)->Arg(1024);
BENCHMARK(BM_project_all<Exec::parallel>)->Arg(256)->Arg(1024);
BENCHMARK(BM_mincut_mapping<Exec::serial>)->Arg(100);
BENCHMARK(BM_mincut_mapping<Exec::parallel>)->Arg(100);
BENCHMARK(BM_bench_suite)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
