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

#ifndef SUBSCHED_SERIALIZE_HPP
#define SUBSCHED_SERIALIZE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "subsched/compiler.hpp"

namespace subsched {

using ojson = nlohmann::ordered_json;

/// {"rounds":[[{"gen":..,"L":..,"R":..},...],...],"tocks":..,"lower_bound":..}
ojson schedule_to_json(const Schedule &s, size_t lower_bound);
ojson plan_to_json(const ReductionPlan &plan);
ojson verify_report_to_json(const VerifyReport &r);

/// Full compile output, including the options that produced it.
ojson result_to_json(const Graph &g, const CompilationResult &r, const CompileOptions &options,
                     const std::optional<CzBaseline> &cz = std::nullopt);

class SchemaError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

Schedule schedule_from_json(const nlohmann::json &j);
ReductionPlan plan_from_json(const nlohmann::json &j);
Mapping mapping_from_json(const nlohmann::json &j);

/// Pieces of a stored compile output needed to re-check it.
struct StoredResult {
    size_t n = 0;
    ReductionPlan plan;
    Mapping mapping;
    Schedule schedule;
    size_t tocks = 0;
};

StoredResult stored_result_from_json(const nlohmann::json &j);

}  // namespace subsched

#endif
