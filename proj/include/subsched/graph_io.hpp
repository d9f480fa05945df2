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

#ifndef SUBSCHED_GRAPH_IO_HPP
#define SUBSCHED_GRAPH_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "subsched/graph.hpp"

namespace subsched {

/// Malformed graph text. Structural violations (asymmetry, self-loops, ...)
/// surface as GraphError instead.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &what, size_t line) : std::runtime_error(format(what, line)), line(line) {
    }
    size_t line;

   private:
    static std::string format(const std::string &what, size_t line) {
        return line ? "line " + std::to_string(line) + ": " + what : what;
    }
};

/// n lines of n whitespace-separated 0/1 entries. Blank lines and lines
/// starting with '#' are ignored.
Graph parse_adjacency_matrix(std::istream &in);

/// First line "n m", then m lines "a b".
Graph parse_edge_list(std::istream &in);

/// {"n": int, "edges": [[a,b],...], "labels": [...]} with optional labels.
/// Edge endpoints may be labels (strings) when "labels" is present.
Graph graph_from_json(const nlohmann::json &j);
nlohmann::ordered_json graph_to_json(const Graph &g);

enum class GraphFormat { adjacency, edge_list, json };

/// Picks the format from the extension (.json, .edges/.el/.txt, .adj/.mat),
/// falling back to content sniffing.
Graph read_graph_file(const std::string &path);
Graph parse_graph(std::istream &in, GraphFormat format);

void write_adjacency_matrix(std::ostream &out, const Graph &g);
void write_edge_list(std::ostream &out, const Graph &g);

}  // namespace subsched

#endif
