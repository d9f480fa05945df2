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

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subsched/commands.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace subsched;

namespace {

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) {
            out.push_back(tok);
        }
    }
    return out;
}

const std::map<std::string, MapperKind> kMappers{
    {"natural", MapperKind::natural}, {"random", MapperKind::random}, {"mincut", MapperKind::mincut}};
const std::map<std::string, SchedulerKind> kSchedulers{
    {"paper", SchedulerKind::paper}, {"first-fit", SchedulerKind::first_fit}};
const std::map<std::string, VerifyPolicy> kVerify{
    {"auto", VerifyPolicy::automatic}, {"always", VerifyPolicy::always}, {"never", VerifyPolicy::never}};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Schedules parity-check measurements that prepare a graph state on a 2-row surface-code layout."};
    app.require_subcommand(1);

    // compile
    CompileArgs compile_args;
    std::string compile_mapper = "mincut";
    std::string compile_scheduler = "paper";
    std::string compile_verify = "auto";
    auto *compile_cmd = app.add_subcommand("compile", "Compile one graph into a verified measurement schedule");
    compile_cmd->add_option("--in", compile_args.graph.in, "Graph file (.adj matrix, .edges list, or .json)");
    compile_cmd->add_option("--gen", compile_args.graph.gen,
                            "Generator spec kind:n[:m]; kinds: path, star, complete, tree, gnm (gnm:100:495)");
    compile_cmd->add_option("--mapper", compile_mapper, "natural | random | mincut")
        ->check(CLI::IsMember({"natural", "random", "mincut"}));
    compile_cmd->add_option("--scheduler", compile_scheduler, "paper | first-fit")
        ->check(CLI::IsMember({"paper", "first-fit"}));
    compile_cmd->add_option("--seed", compile_args.options.seed, "Seed for generators, MIS order and mappers");
    compile_cmd->add_option("--karger-budget", compile_args.options.mincut.budget,
                            "Edge contractions allowed per min cut (caps Karger repetitions)");
    compile_cmd->add_option("--karger-c", compile_args.options.mincut.c, "Repetitions = ceil(c n^2 ln n) before the cap");
    compile_cmd->add_option("--verify", compile_verify, "auto (simulate up to --verify-cap) | always | never")
        ->check(CLI::IsMember({"auto", "always", "never"}));
    compile_cmd->add_option("--verify-cap", compile_args.options.verify_cap, "Largest n simulated under --verify auto");
    compile_cmd->add_flag("--cz-baseline", compile_args.cz_baseline, "Also report the CZ edge-colouring baseline");
    compile_cmd->add_option("--out", compile_args.out, "Write result JSON here (default: stdout)");

    // bench
    BenchArgs bench_args;
    std::string suite = "types";
    std::string kinds, sizes, densities, family, mappers = "mincut,random", schedulers = "paper,first-fit";
    std::string bench_verify = "auto";
    auto *bench_cmd = app.add_subcommand("bench", "Run an experiment sweep and write CSV");
    bench_cmd->add_option("--suite", suite, "types | density | scaling")
        ->check(CLI::IsMember({"types", "density", "scaling"}));
    bench_cmd->add_option("--kind", kinds, "types suite: comma list of path, star, tree, complete");
    bench_cmd->add_option("--n", sizes,
                          "Sizes: '10,50,100', 'a..b' (1-2-5 steps) or 'a..b:step'; density suite: single n");
    bench_cmd->add_option("--density", densities, "density suite: comma list in (0, 1]");
    bench_cmd->add_option("--family", family, "scaling suite: sparse, dense or sparse,dense");
    bench_cmd->add_option("--seeds", bench_args.config.seeds, "Instances per grid point");
    bench_cmd->add_option("--seed", bench_args.config.base_seed, "First instance seed");
    bench_cmd->add_option("--mapper", mappers, "Comma list of mappers");
    bench_cmd->add_option("--scheduler", schedulers, "Comma list of schedulers");
    bench_cmd->add_option("--mincut-max-n", bench_args.config.mincut_max_n, "Skip mincut rows above this n");
    bench_cmd->add_option("--karger-budget", bench_args.config.mincut.budget, "Edge contractions per min cut");
    bench_cmd->add_option("--verify", bench_verify, "auto | always | never")
        ->check(CLI::IsMember({"auto", "always", "never"}));
    bench_cmd->add_flag("--timing", bench_args.config.timing, "Record wall_time_ms (otherwise written as 0)");
    bench_cmd->add_option("--threads", bench_args.config.threads, "Worker threads (default: all cores)");
    bench_cmd->add_option("--out", bench_args.out, "CSV path (default: stdout)");

    // verify
    VerifyArgs verify_args;
    auto *verify_cmd = app.add_subcommand("verify", "Re-check a stored compile result against its graph");
    verify_cmd->add_option("--in", verify_args.graph.in, "Graph file");
    verify_cmd->add_option("--gen", verify_args.graph.gen, "Generator spec kind:n[:m]");
    verify_cmd->add_option("--seed", verify_args.graph.seed, "Seed used with --gen");
    verify_cmd->add_option("--result", verify_args.result, "Result JSON written by compile")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (compile_cmd->parsed()) {
        compile_args.options.mapper = kMappers.at(compile_mapper);
        compile_args.options.scheduler = kSchedulers.at(compile_scheduler);
        compile_args.options.verify = kVerify.at(compile_verify);
        compile_args.graph.seed = compile_args.options.seed;
        return cmd_compile(compile_args, std::cout, std::cerr);
    }
    if (bench_cmd->parsed()) {
        auto &c = bench_args.config;
        try {
            c.suite = parse_bench_suite(suite);
            c.kinds = split_commas(kinds);
            c.families = split_commas(family);
            if (!sizes.empty()) {
                if (c.suite == BenchSuite::density) {
                    auto list = parse_size_list(sizes);
                    if (list.size() != 1) {
                        throw std::invalid_argument("the density suite takes a single --n");
                    }
                    c.density_n = list[0];
                } else {
                    c.sizes = parse_size_list(sizes);
                }
            }
            if (!densities.empty()) {
                c.densities = parse_density_list(densities);
            }
            c.mappers.clear();
            for (const auto &m : split_commas(mappers)) {
                c.mappers.push_back(parse_mapper_kind(m));
            }
            c.schedulers.clear();
            for (const auto &s : split_commas(schedulers)) {
                c.schedulers.push_back(parse_scheduler_kind(s));
            }
            c.verify = kVerify.at(bench_verify);
        } catch (const std::exception &e) {
            std::cerr << "invalid bench grid: " << e.what() << '\n';
            return kExitUsage;
        }
        return cmd_bench(bench_args, std::cout, std::cerr);
    }
    return cmd_verify(verify_args, std::cout, std::cerr);
}
