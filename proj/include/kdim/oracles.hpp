#pragma once

// Brute-force reference implementations used to cross-check the production
// algorithms. Deliberately naive and independent of the main code paths;
// intended for the verification suite and tests, not for large inputs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "kdim/instance.hpp"
#include "kdim/util.hpp"

namespace kdim::oracle {

// Connected components via union-find.
inline std::vector<std::vector<Vertex>> components_union_find(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        int a = find(e.u);
        int b = find(e.v);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) groups[static_cast<std::size_t>(find(v))].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& grp : groups) {
        if (!grp.empty()) out.push_back(std::move(grp));
    }
    return out;
}

inline int max_degree_recount(const Graph& g) {
    std::vector<int> cnt(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        ++cnt[static_cast<std::size_t>(e.u)];
        ++cnt[static_cast<std::size_t>(e.v)];
    }
    int best = 0;
    for (int c : cnt) best = std::max(best, c);
    return best;
}

// Repeatedly delete a minimum-degree vertex (linear scan, smallest id first)
// and report the largest degree seen at deletion time.
inline int degeneracy_peel(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (best == -1 || adj[static_cast<std::size_t>(v)].size() <
                                  adj[static_cast<std::size_t>(best)].size()) {
                best = v;
            }
        }
        d = std::max(d, static_cast<int>(adj[static_cast<std::size_t>(best)].size()));
        alive[static_cast<std::size_t>(best)] = 0;
        for (Vertex w : adj[static_cast<std::size_t>(best)]) {
            adj[static_cast<std::size_t>(w)].erase(best);
        }
        adj[static_cast<std::size_t>(best)].clear();
    }
    return d;
}

namespace detail {

struct DenseAdj {
    int n;
    std::vector<char> adj;
    std::vector<EdgeIndex> eid;

    explicit DenseAdj(const Graph& g)
        : n(g.vertex_count()),
          adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
          eid(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1) {
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            Edge ed = g.edge(e);
            at(ed.u, ed.v) = 1;
            at(ed.v, ed.u) = 1;
            id(ed.u, ed.v) = e;
            id(ed.v, ed.u) = e;
        }
    }
    char& at(Vertex u, Vertex v) {
        return adj[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v)];
    }
    EdgeIndex& id(Vertex u, Vertex v) {
        return eid[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v)];
    }
};

} // namespace detail

// All-triples scan for a negative triangle.
inline bool nwt_cubic(const Graph& g) {
    detail::DenseAdj d(g);
    for (Vertex a = 0; a < d.n; ++a) {
        for (Vertex b = a + 1; b < d.n; ++b) {
            if (!d.at(a, b)) continue;
            for (Vertex c = b + 1; c < d.n; ++c) {
                if (d.at(a, c) && d.at(b, c) &&
                    g.weight(d.id(a, b)) + g.weight(d.id(a, c)) + g.weight(d.id(b, c)) < 0) {
                    return true;
                }
            }
        }
    }
    return false;
}

inline std::set<std::array<int, 3>> covered_triples_cubic(const Graph& g) {
    detail::DenseAdj d(g);
    std::set<std::array<int, 3>> covered;
    for (Vertex a = 0; a < d.n; ++a) {
        for (Vertex b = a + 1; b < d.n; ++b) {
            if (!d.at(a, b)) continue;
            for (Vertex c = b + 1; c < d.n; ++c) {
                if (!d.at(a, c) || !d.at(b, c)) continue;
                std::array<int, 3> t{g.color(a), g.color(b), g.color(c)};
                std::sort(t.begin(), t.end());
                if (t[0] != t[1] && t[1] != t[2]) covered.insert(t);
            }
        }
    }
    return covered;
}

// All-triples coverage check for TC.
inline bool tc_cubic(const Graph& g) {
    int f = g.color_count();
    return covered_triples_cubic(g).size() == binomial(static_cast<std::uint64_t>(f), 3);
}

inline bool triangle_exists_cubic(const Graph& g) {
    detail::DenseAdj d(g);
    for (Vertex a = 0; a < d.n; ++a) {
        for (Vertex b = a + 1; b < d.n; ++b) {
            if (!d.at(a, b)) continue;
            for (Vertex c = b + 1; c < d.n; ++c) {
                if (d.at(a, c) && d.at(b, c)) return true;
            }
        }
    }
    return false;
}

// Enumerates every injective map V(H) -> V(G): all c-subsets, all orderings.
inline bool hsi_all_injections(const Graph& g, const Pattern& h) {
    const int c = h.order();
    const int n = g.vertex_count();
    if (n < c) return false;
    detail::DenseAdj d(g);
    bool found = false;
    for_each_combination(n, c, [&](const std::vector<int>& subset) {
        if (found) return;
        std::vector<Vertex> perm(subset.begin(), subset.end());
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (const Edge& he : h.graph().edges()) {
                if (!d.at(perm[static_cast<std::size_t>(he.u)],
                          perm[static_cast<std::size_t>(he.v)])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                return;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return found;
}

// Plain BFS distances from src; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    std::vector<Vertex> queue{src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

// Answer of an instance under the cubic/brute-force routes above.
inline bool decide(const Instance& inst) {
    switch (inst.problem) {
        case ProblemKind::Nwt: return nwt_cubic(inst.graph);
        case ProblemKind::Tc: return tc_cubic(inst.graph);
        case ProblemKind::Hsi: return hsi_all_injections(inst.graph, *inst.pattern);
    }
    return false;
}

} // namespace kdim::oracle
