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

#ifndef SUBSCHED_COMMANDS_HPP
#define SUBSCHED_COMMANDS_HPP

#include <ostream>
#include <string>

#include "subsched/bench.hpp"
#include "subsched/compiler.hpp"

namespace subsched {

/// Process exit codes shared by every command.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInput = 2,         // unreadable or malformed graph/result file
    kExitDisconnected = 3,  // graph is not connected
    kExitVerify = 4,        // schedule failed validation or simulation
    kExitMismatch = 5,      // stored result does not belong to the graph
};

/// "kind:n[:m]", e.g. "star:100", "tree:50", "gnm:100:495".
Graph graph_from_spec(const std::string &spec, uint64_t seed);

struct GraphSource {
    std::string in;   // file path
    std::string gen;  // generator spec
    uint64_t seed = 0;
};

Graph load_graph(const GraphSource &source);

struct CompileArgs {
    GraphSource graph;
    CompileOptions options;
    std::string out;  // empty: JSON to `out` stream, summary to `err`
    bool cz_baseline = false;
};

int cmd_compile(const CompileArgs &args, std::ostream &out, std::ostream &err);

struct BenchArgs {
    BenchConfig config;
    std::string out;  // empty: CSV to `out` stream
};

int cmd_bench(const BenchArgs &args, std::ostream &out, std::ostream &err);

struct VerifyArgs {
    GraphSource graph;
    std::string result;
    Exec exec = Exec::parallel;
};

/// Re-derives blocks from the stored plan and mapping, validates the stored
/// rounds against them and re-runs the tableau simulation.
int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err);

}  // namespace subsched

#endif
