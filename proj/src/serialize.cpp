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

#include "subsched/serialize.hpp"

namespace subsched {

ojson schedule_to_json(const Schedule &s, size_t lower_bound) {
    ojson rounds = ojson::array();
    for (const auto &round : s.rounds) {
        ojson r = ojson::array();
        for (const auto &b : round) {
            ojson jb;
            jb["gen"] = b.gen;
            jb["L"] = b.left;
            jb["R"] = b.right;
            r.push_back(std::move(jb));
        }
        rounds.push_back(std::move(r));
    }
    ojson j;
    j["rounds"] = std::move(rounds);
    j["tocks"] = s.tocks();
    j["lower_bound"] = lower_bound;
    return j;
}

ojson plan_to_json(const ReductionPlan &plan) {
    ojson j;
    j["independent_set"] = plan.independent_set;
    j["init_basis"] = plan.init_string();
    j["measured"] = plan.measured;
    return j;
}

ojson verify_report_to_json(const VerifyReport &r) {
    ojson j;
    j["pass"] = r.pass;
    j["checked_generators"] = r.checked_generators;
    if (r.failure) {
        j["failure"] = *r.failure;
    }
    return j;
}

ojson result_to_json(const Graph &g, const CompilationResult &r, const CompileOptions &options,
                     const std::optional<CzBaseline> &cz) {
    GraphStats stats = graph_stats(g);
    ojson j;
    j["n"] = stats.n;
    j["edge_count"] = stats.edge_count;
    if (!g.labels().empty()) {
        j["labels"] = g.labels();
    }
    ojson opts;
    opts["mapper"] = mapper_kind_name(options.mapper);
    opts["scheduler"] = scheduler_kind_name(options.scheduler);
    opts["mis_order"] = options.mis_order == MisOrder::degree_ascending ? "degree_ascending" : "seeded_random";
    opts["seed"] = options.seed;
    opts["karger_budget"] = options.mincut.budget;
    opts["verify"] = verify_policy_name(options.verify);
    j["options"] = std::move(opts);
    j["plan"] = plan_to_json(r.plan);
    j["mapping"] = r.mapping.pos;
    j["schedule"] = schedule_to_json(r.schedule, r.lower_bound);
    j["tocks"] = r.tocks;
    j["tiles_full"] = r.tiles_full;
    j["tiles_reduced"] = r.tiles_reduced;
    j["spacetime_volume"] = r.spacetime_volume;
    j["verified"] = r.verified;
    j["verification"] = r.verification ? verify_report_to_json(*r.verification) : ojson(nullptr);
    if (cz) {
        ojson c;
        c["colors"] = cz->colors;
        c["tocks"] = cz->tocks;
        j["cz_baseline"] = std::move(c);
    }
    return j;
}

namespace {

const nlohmann::json &field(const nlohmann::json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw SchemaError(std::string("missing field \"") + name + "\"");
    }
    return j[name];
}

template <typename T>
T as(const nlohmann::json &j, const char *what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception &) {
        throw SchemaError(std::string("field \"") + what + "\" has the wrong type");
    }
}

}  // namespace

Schedule schedule_from_json(const nlohmann::json &j) {
    Schedule s;
    const auto &rounds = field(j, "rounds");
    if (!rounds.is_array()) {
        throw SchemaError("\"rounds\" must be an array");
    }
    for (const auto &round : rounds) {
        if (!round.is_array()) {
            throw SchemaError("each round must be an array");
        }
        Round r;
        for (const auto &b : round) {
            r.push_back({as<Vertex>(field(b, "gen"), "gen"), as<uint32_t>(field(b, "L"), "L"),
                         as<uint32_t>(field(b, "R"), "R")});
        }
        s.rounds.push_back(std::move(r));
    }
    return s;
}

ReductionPlan plan_from_json(const nlohmann::json &j) {
    ReductionPlan plan;
    plan.independent_set = as<std::vector<Vertex>>(field(j, "independent_set"), "independent_set");
    plan.measured = as<std::vector<Vertex>>(field(j, "measured"), "measured");
    auto init = as<std::string>(field(j, "init_basis"), "init_basis");
    for (char c : init) {
        if (c != '+' && c != '0') {
            throw SchemaError("\"init_basis\" may only contain '+' and '0'");
        }
        plan.init_basis.push_back(c == '+' ? InitBasis::plus : InitBasis::zero);
    }
    return plan;
}

Mapping mapping_from_json(const nlohmann::json &j) {
    Mapping m;
    m.pos = as<std::vector<uint32_t>>(j, "mapping");
    return m;
}

StoredResult stored_result_from_json(const nlohmann::json &j) {
    StoredResult r;
    r.n = as<size_t>(field(j, "n"), "n");
    r.plan = plan_from_json(field(j, "plan"));
    r.mapping = mapping_from_json(field(j, "mapping"));
    r.schedule = schedule_from_json(field(j, "schedule"));
    r.tocks = as<size_t>(field(j, "tocks"), "tocks");
    return r;
}

}  // namespace subsched
