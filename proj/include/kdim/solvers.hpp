#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "kdim/instance.hpp"
#include "kdim/util.hpp"

namespace kdim {

// Patterns larger than this blow up factorially in the brute-force embedder.
constexpr int kMaxPatternOrder = 8;

struct TriangleWitness {
    std::array<Vertex, 3> vertices{};
    std::int64_t weight_sum = 0;
    std::array<int, 3> colors{};
};

// Enumerates each triangle exactly once using a degeneracy ordering: for each
// anchor a, intersect the right-neighborhoods of a and of each right-neighbor
// u. Total work O((n+m)*d). fn(a, u, w, e_au, e_aw, e_uw) returns true to stop.
template <typename F>
inline void for_each_triangle(const Graph& g, F&& fn) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() < 3) return;
    DegeneracyOrdering ord = degeneracy_ordering(g);
    std::vector<std::size_t> roff(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (ord.position[static_cast<std::size_t>(w)] > ord.position[static_cast<std::size_t>(v)]) {
                ++roff[static_cast<std::size_t>(v) + 1];
            }
        }
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) roff[v + 1] += roff[v];
    std::vector<std::pair<Vertex, EdgeIndex>> radj(roff[static_cast<std::size_t>(n)]);
    {
        std::vector<std::size_t> cursor(roff.begin(), roff.end() - 1);
        for (Vertex v = 0; v < n; ++v) {
            for (auto [w, e] : g.neighbors(v)) {
                if (ord.position[static_cast<std::size_t>(w)] > ord.position[static_cast<std::size_t>(v)]) {
                    radj[cursor[static_cast<std::size_t>(v)]++] = {w, e};
                }
            }
        }
    }
    std::vector<int> mark(static_cast<std::size_t>(n), -1);
    std::vector<EdgeIndex> closing(static_cast<std::size_t>(n), 0);
    for (Vertex a : ord.order) {
        const std::size_t abegin = roff[static_cast<std::size_t>(a)];
        const std::size_t aend = roff[static_cast<std::size_t>(a) + 1];
        for (std::size_t i = abegin; i < aend; ++i) {
            mark[static_cast<std::size_t>(radj[i].first)] = a;
            closing[static_cast<std::size_t>(radj[i].first)] = radj[i].second;
        }
        for (std::size_t i = abegin; i < aend; ++i) {
            auto [u, e_au] = radj[i];
            for (std::size_t j = roff[static_cast<std::size_t>(u)]; j < roff[static_cast<std::size_t>(u) + 1]; ++j) {
                auto [w, e_uw] = radj[j];
                if (mark[static_cast<std::size_t>(w)] == a) {
                    if (fn(a, u, w, e_au, closing[static_cast<std::size_t>(w)], e_uw)) return;
                }
            }
        }
    }
}

struct NwtResult {
    bool found = false;
    std::optional<TriangleWitness> witness;
};

inline NwtResult solve_nwt(const Graph& g) {
    if (!g.has_weights()) throw Error("solve_nwt requires edge weights");
    NwtResult res;
    for_each_triangle(g, [&](Vertex a, Vertex u, Vertex w, EdgeIndex e_au, EdgeIndex e_aw,
                             EdgeIndex e_uw) {
        std::int64_t sum = g.weight(e_au) + g.weight(e_aw) + g.weight(e_uw);
        if (sum < 0) {
            res.found = true;
            res.witness = TriangleWitness{{a, u, w}, sum, {}};
            return true;
        }
        return false;
    });
    return res;
}

// All color triples {a<b<c} realized by a triangle whose three vertex colors
// are pairwise distinct. A triangle with a repeated color covers nothing.
inline std::set<std::array<int, 3>> covered_triples(const Graph& g) {
    std::set<std::array<int, 3>> covered;
    for_each_triangle(g, [&](Vertex a, Vertex u, Vertex w, EdgeIndex, EdgeIndex, EdgeIndex) {
        std::array<int, 3> t{g.color(a), g.color(u), g.color(w)};
        std::sort(t.begin(), t.end());
        if (t[0] != t[1] && t[1] != t[2]) covered.insert(t);
        return false;
    });
    return covered;
}

namespace detail {

// Lexicographically smallest triple over [f] missing from `covered`.
inline std::array<int, 3> first_missing_triple(const std::set<std::array<int, 3>>& covered, int f) {
    std::array<int, 3> expect{1, 2, 3};
    auto bump = [&]() {
        if (expect[2] < f) {
            ++expect[2];
        } else if (expect[1] + 1 < f) {
            ++expect[1];
            expect[2] = expect[1] + 1;
        } else {
            ++expect[0];
            expect[1] = expect[0] + 1;
            expect[2] = expect[1] + 1;
        }
    };
    for (const auto& t : covered) {
        if (t != expect) return expect;
        bump();
    }
    return expect;
}

} // namespace detail

struct TcResult {
    bool covered_all = false;
    std::optional<std::array<int, 3>> missing;  // lexicographically smallest uncovered triple
};

inline TcResult tc_from_covered(const std::set<std::array<int, 3>>& covered, int f) {
    TcResult res;
    std::uint64_t want = binomial(static_cast<std::uint64_t>(f), 3);
    if (covered.size() == want) {
        res.covered_all = true;
    } else {
        res.missing = detail::first_missing_triple(covered, f);
    }
    return res;
}

inline TcResult solve_tc(const Graph& g) {
    if (!g.has_colors()) throw Error("solve_tc requires vertex colors");
    if (!g.coloring_surjective()) throw Error("solve_tc requires a surjective coloring");
    return tc_from_covered(covered_triples(g), g.color_count());
}

namespace detail {

inline std::uint64_t pack_edge(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

} // namespace detail

// Subgraph (not induced) containment of a small connected pattern, by
// backtracking over injective maps anchored at already-embedded neighbors.
inline bool solve_hsi(const Graph& g, const Pattern& h) {
    const int c = h.order();
    if (c > kMaxPatternOrder) {
        throw Error("pattern order " + std::to_string(c) + " exceeds supported maximum " +
                    std::to_string(kMaxPatternOrder));
    }
    if (g.vertex_count() < c || g.edge_count() < h.pattern_edge_count()) return false;

    // Embed H's vertices in BFS order from 0 so every later vertex has an
    // already-mapped neighbor to anchor its candidates.
    std::vector<Vertex> horder;
    std::vector<int> hpos(static_cast<std::size_t>(c), -1);
    horder.push_back(0);
    hpos[0] = 0;
    for (std::size_t head = 0; head < horder.size(); ++head) {
        for (auto [w, e] : h.graph().neighbors(horder[head])) {
            (void)e;
            if (hpos[static_cast<std::size_t>(w)] == -1) {
                hpos[static_cast<std::size_t>(w)] = static_cast<int>(horder.size());
                horder.push_back(w);
            }
        }
    }
    std::vector<int> anchor(static_cast<std::size_t>(c), -1);
    std::vector<std::vector<int>> earlier(static_cast<std::size_t>(c));
    for (int i = 1; i < c; ++i) {
        for (auto [w, e] : h.graph().neighbors(horder[static_cast<std::size_t>(i)])) {
            (void)e;
            int j = hpos[static_cast<std::size_t>(w)];
            if (j < i) {
                earlier[static_cast<std::size_t>(i)].push_back(j);
                if (anchor[static_cast<std::size_t>(i)] == -1) anchor[static_cast<std::size_t>(i)] = j;
            }
        }
    }

    std::unordered_set<std::uint64_t> gedges;
    gedges.reserve(static_cast<std::size_t>(g.edge_count()) * 2);
    for (const Edge& e : g.edges()) gedges.insert(detail::pack_edge(e.u, e.v));

    auto comps = components(g);
    std::vector<int> comp_size(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& comp : comps) {
        for (Vertex v : comp) comp_size[static_cast<std::size_t>(v)] = static_cast<int>(comp.size());
    }

    std::vector<Vertex> image(static_cast<std::size_t>(c), -1);
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);

    auto fits = [&](int slot, Vertex v) {
        for (int j : earlier[static_cast<std::size_t>(slot)]) {
            if (!gedges.count(detail::pack_edge(v, image[static_cast<std::size_t>(j)]))) return false;
        }
        return true;
    };

    std::function<bool(int)> extend = [&](int slot) -> bool {
        if (slot == c) return true;
        if (slot == 0) {
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (comp_size[static_cast<std::size_t>(v)] < c) continue;
                image[0] = v;
                used[static_cast<std::size_t>(v)] = 1;
                if (extend(1)) return true;
                used[static_cast<std::size_t>(v)] = 0;
            }
            return false;
        }
        Vertex base = image[static_cast<std::size_t>(anchor[static_cast<std::size_t>(slot)])];
        for (auto [v, e] : g.neighbors(base)) {
            (void)e;
            if (used[static_cast<std::size_t>(v)] || !fits(slot, v)) continue;
            image[static_cast<std::size_t>(slot)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            if (extend(slot + 1)) return true;
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return extend(0);
}

// Decides the instance component by component. For TC, triangles are found
// per component but triple coverage is aggregated over the whole graph.
inline bool solve_per_component(const Instance& inst) {
    const Graph& g = inst.graph;
    auto comps = components(g);
    switch (inst.problem) {
        case ProblemKind::Nwt: {
            for (const auto& comp : comps) {
                if (comp.size() < 3) continue;
                auto [sub, prov] = induced_subgraph(g, comp);
                (void)prov;
                if (solve_nwt(sub).found) return true;
            }
            return false;
        }
        case ProblemKind::Tc: {
            if (!g.coloring_surjective()) throw Error("solve_per_component: tc coloring must be surjective");
            std::set<std::array<int, 3>> covered;
            for (const auto& comp : comps) {
                if (comp.size() < 3) continue;
                auto [sub, prov] = induced_subgraph(g, comp);
                (void)prov;
                auto part = covered_triples(sub);
                covered.insert(part.begin(), part.end());
            }
            return tc_from_covered(covered, g.color_count()).covered_all;
        }
        case ProblemKind::Hsi: {
            const Pattern& h = *inst.pattern;
            for (const auto& comp : comps) {
                if (static_cast<int>(comp.size()) < h.order()) continue;
                auto [sub, prov] = induced_subgraph(g, comp);
                (void)prov;
                if (solve_hsi(sub, h)) return true;
            }
            return false;
        }
    }
    return false;
}

} // namespace kdim
