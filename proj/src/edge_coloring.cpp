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

#include "subsched/edge_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace subsched {

namespace {

constexpr uint32_t kNone = UINT32_MAX;

// at[v * palette + c] is the neighbor joined to v by the edge of colour c.
struct ColorTable {
    size_t palette;
    std::vector<uint32_t> at;

    ColorTable(size_t n, size_t palette) : palette(palette), at(n * palette, kNone) {
    }
    uint32_t &slot(Vertex v, size_t c) {
        return at[v * palette + c];
    }
    bool is_free(Vertex v, size_t c) const {
        return at[v * palette + c] == kNone;
    }
    void set(Vertex a, Vertex b, size_t c) {
        slot(a, c) = b;
        slot(b, c) = a;
    }
    void clear(Vertex a, Vertex b, size_t c) {
        slot(a, c) = kNone;
        slot(b, c) = kNone;
    }
    size_t color_of(Vertex a, Vertex b) const {
        for (size_t c = 0; c < palette; c++) {
            if (at[a * palette + c] == b) {
                return c;
            }
        }
        return kNone;
    }
    size_t first_free(Vertex v) const {
        for (size_t c = 0; c < palette; c++) {
            if (is_free(v, c)) {
                return c;
            }
        }
        return kNone;
    }

    // Swaps colours a and b along the maximal a/b path starting at `start`
    // with its a-coloured edge. Returns the path's far end.
    Vertex swap_chain(Vertex start, size_t a, size_t b, Vertex stop_if, bool *hit) {
        std::vector<std::pair<Vertex, Vertex>> path;
        std::vector<size_t> colors;
        Vertex x = start;
        size_t cur = a;
        while (!is_free(x, cur)) {
            Vertex y = slot(x, cur);
            path.emplace_back(x, y);
            colors.push_back(cur);
            x = y;
            cur = cur == a ? b : a;
        }
        *hit = x == stop_if;
        if (*hit) {
            return x;
        }
        for (size_t i = 0; i < path.size(); i++) {
            clear(path[i].first, path[i].second, colors[i]);
        }
        for (size_t i = 0; i < path.size(); i++) {
            set(path[i].first, path[i].second, colors[i] == a ? b : a);
        }
        return x;
    }

    EdgeColoring extract(const Graph &g) const {
        EdgeColoring out;
        out.color.reserve(g.num_edges());
        for (const auto &e : g.edges()) {
            size_t c = color_of(e.a, e.b);
            if (c == kNone) {
                throw std::logic_error("edge left uncoloured");
            }
            out.color.push_back((uint32_t)c);
            out.num_colors = std::max(out.num_colors, c + 1);
        }
        return out;
    }
};

size_t max_degree(const Graph &g) {
    size_t d = 0;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        d = std::max(d, g.degree(v));
    }
    return d;
}

}  // namespace

std::optional<EdgeColoring> kempe_edge_coloring(const Graph &g, size_t palette) {
    if (palette == 0) {
        return g.num_edges() ? std::nullopt : std::optional<EdgeColoring>(EdgeColoring{});
    }
    constexpr size_t kMaxChainAttempts = 256;
    ColorTable table(g.num_vertices(), palette);
    for (const auto &e : g.edges()) {
        Vertex u = e.a;
        Vertex v = e.b;
        size_t common = kNone;
        for (size_t c = 0; c < palette && common == kNone; c++) {
            if (table.is_free(u, c) && table.is_free(v, c)) {
                common = c;
            }
        }
        if (common != kNone) {
            table.set(u, v, common);
            continue;
        }
        bool done = false;
        size_t attempts = 0;
        for (size_t a = 0; a < palette && !done && attempts < kMaxChainAttempts; a++) {
            if (!table.is_free(u, a)) {
                continue;
            }
            for (size_t b = 0; b < palette && !done && attempts < kMaxChainAttempts; b++) {
                if (!table.is_free(v, b)) {
                    continue;
                }
                attempts++;
                bool hit = false;
                table.swap_chain(v, a, b, u, &hit);
                if (!hit) {
                    table.set(u, v, a);
                    done = true;
                }
            }
        }
        if (!done) {
            return std::nullopt;
        }
    }
    return table.extract(g);
}

EdgeColoring misra_gries_edge_coloring(const Graph &g) {
    size_t palette = max_degree(g) + 1;
    ColorTable table(g.num_vertices(), palette);
    for (const auto &e : g.edges()) {
        Vertex u = e.a;
        // Maximal fan at u starting from the uncoloured edge (u, e.b).
        std::vector<Vertex> fan{e.b};
        std::vector<bool> in_fan(g.num_vertices(), false);
        in_fan[e.b] = true;
        for (bool grew = true; grew;) {
            grew = false;
            Vertex last = fan.back();
            for (size_t c = 0; c < palette; c++) {
                if (!table.is_free(last, c)) {
                    continue;
                }
                Vertex w = table.slot(u, c);
                if (w != kNone && !in_fan[w]) {
                    fan.push_back(w);
                    in_fan[w] = true;
                    grew = true;
                    break;
                }
            }
        }
        size_t c = table.first_free(u);
        size_t d = table.first_free(fan.back());
        if (c != d) {
            bool hit = false;
            table.swap_chain(u, d, c, kNone, &hit);
        }
        // First fan vertex w (with a still-valid fan prefix) on which d is free.
        size_t k = kNone;
        for (size_t i = 0; i < fan.size(); i++) {
            if (i > 0) {
                size_t ci = table.color_of(u, fan[i]);
                if (ci == kNone || !table.is_free(fan[i - 1], ci)) {
                    break;
                }
            }
            if (table.is_free(fan[i], d)) {
                k = i;
                break;
            }
        }
        if (k == kNone) {
            throw std::logic_error("Misra-Gries found no rotatable fan prefix");
        }
        std::vector<size_t> shifted(k);
        for (size_t i = 0; i < k; i++) {
            shifted[i] = table.color_of(u, fan[i + 1]);
        }
        for (size_t i = 0; i < k; i++) {
            table.clear(u, fan[i + 1], shifted[i]);
        }
        for (size_t i = 0; i < k; i++) {
            table.set(u, fan[i], shifted[i]);
        }
        table.set(u, fan[k], d);
    }
    return table.extract(g);
}

EdgeColoring edge_coloring(const Graph &g) {
    if (auto c = kempe_edge_coloring(g, max_degree(g))) {
        return *c;
    }
    return misra_gries_edge_coloring(g);
}

bool is_proper_edge_coloring(const Graph &g, const EdgeColoring &c) {
    if (c.color.size() != g.num_edges()) {
        return false;
    }
    std::vector<std::vector<uint32_t>> seen(g.num_vertices());
    for (size_t i = 0; i < g.num_edges(); i++) {
        const auto &e = g.edges()[i];
        if (c.color[i] >= c.num_colors) {
            return false;
        }
        for (Vertex v : {e.a, e.b}) {
            auto &s = seen[v];
            if (std::find(s.begin(), s.end(), c.color[i]) != s.end()) {
                return false;
            }
            s.push_back(c.color[i]);
        }
    }
    return true;
}

}  // namespace subsched
