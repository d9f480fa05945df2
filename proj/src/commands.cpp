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

#include "subsched/commands.hpp"

#include <fstream>
#include <sstream>

#include "subsched/graph_io.hpp"
#include "subsched/serialize.hpp"

namespace subsched {

Graph graph_from_spec(const std::string &spec, uint64_t seed) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        parts.push_back(tok);
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw ParseError("generator spec must be kind:n[:m], got '" + spec + "'", 0);
    }
    GenerateParams p;
    try {
        p.kind = parse_graph_kind(parts[0]);
        size_t used = 0;
        p.n = std::stoull(parts[1], &used);
        if (used != parts[1].size()) {
            throw std::invalid_argument("n");
        }
        if (parts.size() == 3) {
            p.m = std::stoull(parts[2], &used);
            if (used != parts[2].size()) {
                throw std::invalid_argument("m");
            }
        }
    } catch (const GraphError &) {
        throw;
    } catch (const std::exception &) {
        throw ParseError("generator spec must be kind:n[:m], got '" + spec + "'", 0);
    }
    if (p.kind == GraphKind::gnm && parts.size() != 3) {
        throw ParseError("gnm needs an edge count: gnm:n:m", 0);
    }
    p.seed = seed;
    return generate(p);
}

Graph load_graph(const GraphSource &source) {
    if (!source.in.empty() && !source.gen.empty()) {
        throw ParseError("give either --in or --gen, not both", 0);
    }
    if (!source.in.empty()) {
        return read_graph_file(source.in);
    }
    if (!source.gen.empty()) {
        return graph_from_spec(source.gen, source.seed);
    }
    throw ParseError("no input graph: use --in FILE or --gen kind:n[:m]", 0);
}

namespace {

bool write_text(const std::string &path, const std::string &text, std::ostream &err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    f << text;
    return (bool)f;
}

// Loads the graph, mapping every failure onto an exit code.
int guarded_load(const GraphSource &source, Graph &g, std::ostream &err) {
    try {
        g = load_graph(source);
        return kExitOk;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const GraphError &e) {
        err << "invalid graph: " << e.what() << '\n';
    } catch (const GenerationError &e) {
        err << "generator failed: " << e.what() << '\n';
    }
    return kExitInput;
}

}  // namespace

int cmd_compile(const CompileArgs &args, std::ostream &out, std::ostream &err) {
    Graph g;
    if (int rc = guarded_load(args.graph, g, err)) {
        return rc;
    }
    CompilationResult r;
    try {
        r = compile(g, args.options);
    } catch (const CompileError &e) {
        err << "compile error: " << e.what() << '\n';
        return e.kind == CompileError::Kind::disconnected ? kExitDisconnected : kExitVerify;
    }
    std::optional<CzBaseline> cz;
    if (args.cz_baseline) {
        cz = cz_baseline_depth(g);
    }
    std::string json = result_to_json(g, r, args.options, cz).dump(2) + "\n";

    std::ostringstream summary;
    summary << "n=" << g.num_vertices() << " edges=" << g.num_edges() << " measured=" << r.plan.measured.size()
            << " tocks=" << r.tocks << " lower_bound=" << r.lower_bound << " tiles=" << r.tiles_reduced
            << " volume=" << r.spacetime_volume << " verified=" << (r.verified ? "true" : "false");
    if (cz) {
        summary << " cz_colors=" << cz->colors;
    }
    summary << '\n';

    if (args.out.empty()) {
        out << json;
        err << summary.str();
    } else {
        if (!write_text(args.out, json, err)) {
            return kExitInput;
        }
        out << summary.str();
    }
    return kExitOk;
}

int cmd_bench(const BenchArgs &args, std::ostream &out, std::ostream &err) {
    std::vector<BenchRow> rows;
    try {
        rows = run_bench(args.config);
    } catch (const std::invalid_argument &e) {
        err << "invalid bench grid: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "bench failed: " << e.what() << '\n';
        return kExitVerify;
    }
    std::ostringstream csv;
    write_csv(csv, rows);
    if (args.out.empty()) {
        out << csv.str();
    } else {
        if (!write_text(args.out, csv.str(), err)) {
            return kExitInput;
        }
        out << "wrote " << rows.size() << " rows to " << args.out << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err) {
    Graph g;
    if (int rc = guarded_load(args.graph, g, err)) {
        return rc;
    }
    StoredResult stored;
    try {
        std::ifstream f(args.result);
        if (!f) {
            err << "parse error: cannot open '" << args.result << "'\n";
            return kExitInput;
        }
        nlohmann::json j = nlohmann::json::parse(f);
        stored = stored_result_from_json(j);
    } catch (const nlohmann::json::exception &e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const SchemaError &e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInput;
    }

    size_t n = g.num_vertices();
    if (stored.n != n || stored.plan.init_basis.size() != n || stored.mapping.size() != n) {
        err << "mismatch: result describes n=" << stored.n << " (plan " << stored.plan.init_basis.size()
            << ", mapping " << stored.mapping.size() << ") but the graph has n=" << n << '\n';
        return kExitMismatch;
    }

    std::vector<std::string> problems;
    try {
        ReductionPlan expected = reduce_generators(g, stored.plan.independent_set);
        if (expected.measured != stored.plan.measured || expected.init_basis != stored.plan.init_basis) {
            problems.push_back("stored plan is inconsistent with its independent set");
        }
    } catch (const ReductionError &e) {
        problems.push_back(std::string("stored plan: ") + e.what());
    }
    for (Vertex v : stored.plan.measured) {
        if (v >= n) {
            err << "mismatch: measured generator g" << v << " out of range\n";
            return kExitMismatch;
        }
    }
    if (!stored.mapping.is_bijection()) {
        problems.push_back("stored mapping is not a bijection");
    }
    if (stored.tocks != stored.schedule.tocks()) {
        problems.push_back("stored tocks (" + std::to_string(stored.tocks) + ") differs from the round count (" +
                           std::to_string(stored.schedule.tocks()) + ")");
    }

    VerifyReport report;
    if (problems.empty()) {
        auto blocks = build_blocks(g, stored.plan.measured, stored.mapping);
        ValidationReport check = validate_schedule(stored.schedule, blocks);
        for (const auto &v : check.violations) {
            problems.push_back(v);
        }
        VerifyOptions vo;
        vo.exec = args.exec;
        report = verify_compilation(g, stored.plan, stored.schedule, vo);
        if (!report.pass && report.failure) {
            problems.push_back(*report.failure);
        }
    }
    if (!problems.empty()) {
        report.pass = false;
        if (!report.failure) {
            report.failure = problems.front();
        }
    }
    for (const auto &p : problems) {
        err << "violation: " << p << '\n';
    }
    out << verify_report_to_json(report).dump() << '\n';
    return report.pass ? kExitOk : kExitVerify;
}

}  // namespace subsched
