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

#ifndef SUBSCHED_COMPILER_HPP
#define SUBSCHED_COMPILER_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "subsched/graph.hpp"
#include "subsched/mapping.hpp"
#include "subsched/scheduler.hpp"
#include "subsched/stabilizer.hpp"
#include "subsched/verify.hpp"

namespace subsched {

enum class VerifyPolicy { automatic, always, never };

VerifyPolicy parse_verify_policy(const std::string &name);
std::string verify_policy_name(VerifyPolicy policy);

struct CompileOptions {
    MapperKind mapper = MapperKind::mincut;
    SchedulerKind scheduler = SchedulerKind::paper;
    MisOrder mis_order = MisOrder::degree_ascending;
    uint64_t seed = 0;
    MincutOptions mincut;  // seed field is overridden by `seed`
    VerifyPolicy verify = VerifyPolicy::automatic;
    size_t verify_cap = 200;  // automatic policy simulates only up to this n
    Exec exec = Exec::parallel;
};

struct CompilationResult {
    ReductionPlan plan;
    Mapping mapping;
    std::vector<AncillaBlock> blocks;
    Schedule schedule;
    size_t tocks = 0;
    size_t lower_bound = 0;
    size_t tiles_full = 0;
    size_t tiles_reduced = 0;
    size_t spacetime_volume = 0;
    bool verified = false;
    std::optional<VerifyReport> verification;  // empty when simulation was skipped
};

class CompileError : public std::runtime_error {
   public:
    enum class Kind { disconnected, invalid_schedule, verification_failed };
    CompileError(Kind kind, const std::string &what) : std::runtime_error(what), kind(kind) {
    }
    Kind kind;
};

/// reduce -> map -> schedule -> validate -> (simulate). Throws CompileError
/// on disconnected input or when the schedule fails validation or
/// simulation; an unverified schedule is never returned as verified.
CompilationResult compile(const Graph &g, const CompileOptions &options = {});

/// The schedule/validate/simulate tail of compile() for a precomputed plan
/// and mapping. options.mapper and options.mis_order are ignored.
CompilationResult finish_compilation(const Graph &g, ReductionPlan plan, Mapping mapping,
                                     const CompileOptions &options);

enum class Layout { full, reduced };

/// Two rows of 2n tiles; the reduced layout drops one tile per |+> qubit.
size_t space_tiles(size_t n, size_t mis_size, Layout layout);

/// tiles_reduced * tocks.
size_t spacetime_volume(const CompilationResult &result);

struct CzBaseline {
    size_t colors = 0;  // CZ layers from a proper edge colouring
    size_t tocks = 0;   // two parity measurements per CZ layer
};

CzBaseline cz_baseline_depth(const Graph &g);

}  // namespace subsched

#endif
