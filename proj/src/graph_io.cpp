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

#include "subsched/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace subsched {

namespace {

bool skippable(const std::string &line) {
    size_t i = line.find_first_not_of(" \t\r");
    return i == std::string::npos || line[i] == '#';
}

}  // namespace

Graph parse_adjacency_matrix(std::istream &in) {
    std::vector<std::vector<int>> rows;
    std::vector<size_t> line_of_row;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (skippable(line)) {
            continue;
        }
        std::istringstream ss(line);
        std::vector<int> row;
        std::string tok;
        while (ss >> tok) {
            if (tok != "0" && tok != "1") {
                throw ParseError("non-binary entry '" + tok + "' in adjacency matrix", lineno);
            }
            row.push_back(tok == "1");
        }
        rows.push_back(std::move(row));
        line_of_row.push_back(lineno);
    }
    if (rows.empty()) {
        throw ParseError("empty adjacency matrix", 0);
    }
    try {
        return Graph::from_adjacency_matrix(rows);
    } catch (const GraphError &e) {
        size_t at = e.row ? line_of_row[*e.row] : 0;
        throw ParseError(e.what(), at);
    }
}

Graph parse_edge_list(std::istream &in) {
    std::string line;
    size_t lineno = 0;
    int64_t n = -1;
    int64_t m = -1;
    std::vector<std::pair<int64_t, int64_t>> pairs;
    std::vector<size_t> line_of_pair;
    while (std::getline(in, line)) {
        lineno++;
        if (skippable(line)) {
            continue;
        }
        std::istringstream ss(line);
        int64_t a;
        int64_t b;
        std::string extra;
        if (!(ss >> a >> b) || (ss >> extra)) {
            throw ParseError("expected two integers", lineno);
        }
        if (n < 0) {
            n = a;
            m = b;
            if (n < 1 || m < 0) {
                throw ParseError("header must be 'n m' with n >= 1 and m >= 0", lineno);
            }
            continue;
        }
        pairs.emplace_back(a, b);
        line_of_pair.push_back(lineno);
    }
    if (n < 0) {
        throw ParseError("missing 'n m' header", 0);
    }
    if ((int64_t)pairs.size() != m) {
        throw ParseError(
            "header declares " + std::to_string(m) + " edges but " + std::to_string(pairs.size()) + " were given",
            lineno);
    }
    try {
        return Graph::from_edge_list((size_t)n, pairs);
    } catch (const GraphError &e) {
        throw ParseError(e.what(), e.row ? line_of_pair[*e.row] : 0);
    }
}

Graph graph_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ParseError("graph JSON must be an object with \"n\" and \"edges\"", 0);
    }
    if (!j["n"].is_number_integer() || j["n"].get<int64_t>() < 1) {
        throw ParseError("\"n\" must be a positive integer", 0);
    }
    size_t n = j["n"].get<size_t>();
    std::vector<std::string> labels;
    std::map<std::string, int64_t> index_of;
    if (j.contains("labels")) {
        for (const auto &l : j["labels"]) {
            std::string s = l.is_string() ? l.get<std::string>() : l.dump();
            if (!index_of.emplace(s, (int64_t)labels.size()).second) {
                throw ParseError("duplicate label '" + s + "'", 0);
            }
            labels.push_back(s);
        }
        if (labels.size() != n) {
            throw ParseError("\"labels\" must have n entries", 0);
        }
    }
    auto endpoint = [&](const nlohmann::json &v) -> int64_t {
        if (v.is_number_integer()) {
            return v.get<int64_t>();
        }
        if (v.is_string()) {
            auto it = index_of.find(v.get<std::string>());
            if (it == index_of.end()) {
                throw ParseError("unknown vertex label '" + v.get<std::string>() + "'", 0);
            }
            return it->second;
        }
        throw ParseError("edge endpoint must be an integer or a label", 0);
    };
    std::vector<std::pair<int64_t, int64_t>> pairs;
    for (const auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("each edge must be a 2-element array", 0);
        }
        pairs.emplace_back(endpoint(e[0]), endpoint(e[1]));
    }
    Graph g;
    try {
        g = Graph::from_edge_list(n, pairs);
    } catch (const GraphError &e) {
        throw ParseError(e.what(), 0);
    }
    g.set_labels(std::move(labels));
    return g;
}

nlohmann::ordered_json graph_to_json(const Graph &g) {
    nlohmann::ordered_json j;
    j["n"] = g.num_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({e.a, e.b});
    }
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        j["labels"] = g.labels();
    }
    return j;
}

Graph parse_graph(std::istream &in, GraphFormat format) {
    switch (format) {
        case GraphFormat::adjacency:
            return parse_adjacency_matrix(in);
        case GraphFormat::edge_list:
            return parse_edge_list(in);
        case GraphFormat::json: {
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::parse_error &e) {
                throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
            }
            return graph_from_json(j);
        }
    }
    throw ParseError("unknown graph format", 0);
}

namespace {

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

GraphFormat sniff(const std::string &text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        return GraphFormat::json;
    }
    // An adjacency matrix row of length 2 is indistinguishable from an edge
    // list header; prefer the matrix reading only when the first data line
    // has a token count other than 2.
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (skippable(line)) {
            continue;
        }
        std::istringstream ls(line);
        size_t count = 0;
        std::string tok;
        while (ls >> tok) {
            count++;
        }
        return count == 2 ? GraphFormat::edge_list : GraphFormat::adjacency;
    }
    return GraphFormat::adjacency;
}

}  // namespace

Graph read_graph_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ParseError("cannot open '" + path + "'", 0);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    GraphFormat format;
    if (ends_with(path, ".json")) {
        format = GraphFormat::json;
    } else if (ends_with(path, ".adj") || ends_with(path, ".mat")) {
        format = GraphFormat::adjacency;
    } else if (ends_with(path, ".edges") || ends_with(path, ".el")) {
        format = GraphFormat::edge_list;
    } else {
        format = sniff(text);
    }
    std::istringstream in(text);
    return parse_graph(in, format);
}

void write_adjacency_matrix(std::ostream &out, const Graph &g) {
    for (const auto &row : g.adjacency_matrix()) {
        for (size_t j = 0; j < row.size(); j++) {
            out << (j ? " " : "") << (int)row[j];
        }
        out << '\n';
    }
}

void write_edge_list(std::ostream &out, const Graph &g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto &e : g.edges()) {
        out << e.a << ' ' << e.b << '\n';
    }
}

}  // namespace subsched
