#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "kdim/graph.hpp"

namespace kdim {

// Improper edge coloring with bounded per-vertex load: fewer than 2b colors,
// and no vertex is incident to more than ceil(maxdeg / b) edges of one color.
struct EdgeColoring {
    std::vector<int> color;  // per edge index, 1-based color ids
    int b = 1;
    int f = 0;    // number of colors used; always <= 2b - 1
    int cap = 0;  // ceil(maxdeg / b)
};

// Greedy: edges in lexicographic (u, v) order, each assigned the smallest
// color that still has load < cap at both endpoints. At any edge each
// endpoint can have filled at most b-1 colors, so color 2b-1 is always free.
inline EdgeColoring greedy_edge_color(const Graph& g, int b) {
    if (b < 1) throw Error("greedy_edge_color requires b >= 1");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int maxdeg = max_degree(g);
    EdgeColoring out;
    out.b = b;
    out.cap = (maxdeg + b - 1) / b;
    out.color.assign(static_cast<std::size_t>(m), 0);
    if (m == 0) return out;

    std::vector<EdgeIndex> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex c) {
        return g.edge(a) < g.edge(c);
    });

    const int palette = 2 * b;  // colors 1..2b-1, slot 0 unused
    std::vector<int> load(static_cast<std::size_t>(n) * static_cast<std::size_t>(palette), 0);
    auto slot = [&](Vertex v, int c) -> int& {
        return load[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette) +
                    static_cast<std::size_t>(c)];
    };
    for (EdgeIndex e : order) {
        Edge ed = g.edge(e);
        int chosen = 0;
        for (int c = 1; c <= 2 * b - 1; ++c) {
            if (slot(ed.u, c) < out.cap && slot(ed.v, c) < out.cap) {
                chosen = c;
                break;
            }
        }
        if (chosen == 0) throw Error("greedy_edge_color: no color available");  // cannot happen
        out.color[static_cast<std::size_t>(e)] = chosen;
        ++slot(ed.u, chosen);
        ++slot(ed.v, chosen);
        out.f = std::max(out.f, chosen);
    }
    return out;
}

} // namespace kdim
