#pragma once

// Seeded instance generators. All randomness flows through Rng, which only
// uses the fully specified mt19937_64 stream plus rejection sampling, so a
// given seed produces the same instance on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "kdim/instance.hpp"
#include "kdim/oracles.hpp"
#include "kdim/solvers.hpp"
#include "kdim/util.hpp"

namespace kdim {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng::below(0)");
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        const std::uint64_t den = std::uint64_t{1} << 32;
        auto threshold = static_cast<std::uint64_t>(p * static_cast<double>(den));
        return below(den) < threshold;
    }

private:
    std::mt19937_64 engine_;
};

// Combines a base seed with stream indices, so independent trials get
// independent deterministic streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline std::vector<Edge> gnp_edges(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.chance(p)) edges.push_back({u, v});
        }
    }
    return edges;
}

inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw Error("gnp: n must be nonnegative");
    Rng rng(seed);
    return Graph(n, gnp_edges(n, p, rng));
}

// Uniform-ish random graph with exactly m edges, by rejection sampling.
inline Graph gen_gnm(int n, std::uint64_t m, std::uint64_t seed) {
    if (n < 0) throw Error("gnm: n must be nonnegative");
    std::uint64_t max_edges = binomial(static_cast<std::uint64_t>(n), 2);
    if (m > max_edges) throw Error("gnm: more edges requested than the simple graph can hold");
    Rng rng(seed);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (seen.insert(key).second) edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

// Random weighted graph; with plant=true a triangle with weights -1,-1,-1 is
// planted (adding any missing edges), making the instance a certified yes.
inline Instance gen_planted_nwt(int n, double p, int wmin, int wmax, bool plant,
                                ParamKind param, std::uint64_t seed) {
    if (n < 0 || wmin > wmax) throw Error("planted-nwt: invalid parameters");
    if (plant && n < 3) throw Error("planted-nwt: planting needs n >= 3");
    Rng rng(seed);
    std::vector<Edge> edges = gnp_edges(n, p, rng);
    std::vector<std::int64_t> weights;
    weights.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        weights.push_back(rng.range(wmin, wmax));
    }
    if (plant) {
        Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        Vertex b = a;
        Vertex c = a;
        while (b == a) b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        while (c == a || c == b) c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        auto put = [&](Vertex u, Vertex v) {
            if (u > v) std::swap(u, v);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].u == u && edges[i].v == v) {
                    weights[i] = -1;
                    return;
                }
            }
            edges.push_back({u, v});
            weights.push_back(-1);
        };
        put(a, b);
        put(a, c);
        put(b, c);
    }
    Instance inst = make_instance(Graph(n, std::move(edges), std::move(weights)),
                                  ProblemKind::Nwt, param);
    if (plant && !solve_nwt(inst.graph).found) {
        throw Error("planted-nwt: planted instance failed the yes check");  // cannot happen
    }
    return inst;
}

// Random graph with a uniform coloring forced to be surjective onto [f]
// (vertex v < f gets color v+1).
inline Instance gen_random_tc(int n, double p, int f, ParamKind param, std::uint64_t seed) {
    if (f < 1 || f > n) throw Error("random-tc: need 1 <= f <= n");
    Rng rng(seed);
    std::vector<Edge> edges = gnp_edges(n, p, rng);
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        colors[static_cast<std::size_t>(v)] =
            v < f ? v + 1 : static_cast<int>(rng.below(static_cast<std::uint64_t>(f))) + 1;
    }
    return make_instance(Graph(n, std::move(edges), std::nullopt, std::move(colors)),
                         ProblemKind::Tc, param);
}

// High-degree gadget graph for Turing-kernel stress: hub-and-spoke groups
// whose spokes are chained with probability 1/2, giving fat balls around the
// hubs and plenty of triangles.
inline Instance gen_hard_ball(int n, int hubs, Pattern pattern, ParamKind param,
                              std::uint64_t seed) {
    if (hubs < 1 || n < 2 * hubs) throw Error("hard-ball: need hubs >= 1 and n >= 2*hubs");
    Rng rng(seed);
    std::vector<Edge> edges;
    int group = n / hubs;
    for (int h = 0; h < hubs; ++h) {
        int lo = h * group;
        int hi = h == hubs - 1 ? n : lo + group;
        for (Vertex v = lo + 1; v < hi; ++v) edges.push_back({lo, v});
        for (Vertex v = lo + 1; v + 1 < hi; ++v) {
            if (rng.chance(0.5)) edges.push_back({v, v + 1});
        }
    }
    return make_instance(Graph(n, std::move(edges)), ProblemKind::Hsi, param,
                         std::move(pattern));
}

inline Instance gen_gnp_hsi(int n, double p, Pattern pattern, ParamKind param,
                            std::uint64_t seed) {
    return make_instance(gen_gnp(n, p, seed), ProblemKind::Hsi, param, std::move(pattern));
}

// --- benchmark builders with a pinned parameter value -----------------------

// Connected weighted graph of order exactly k0 (component-order parameter).
// plant=true embeds a -1,-1,-1 triangle; otherwise all weights are >= 1, so
// the instance is a certified no.
inline Instance planted_component_instance(int k0, bool plant, std::uint64_t seed) {
    if (k0 < 3) throw Error("planted_component_instance: k0 >= 3 required");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    auto add = [&](Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (u != v && seen.insert(key).second) edges.push_back({u, v});
    };
    for (Vertex v = 1; v < k0; ++v) {
        add(v, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))));
    }
    for (int extra = 0; extra < k0 / 2; ++extra) {
        add(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(k0))),
            static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(k0))));
    }
    if (plant) {
        add(0, 1);
        add(0, 2);
        add(1, 2);
    }
    std::vector<std::int64_t> weights;
    weights.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) weights.push_back(rng.range(1, 9));
    if (plant) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].v <= 2) weights[i] = -1;  // the three edges among {0,1,2}
        }
    }
    Instance inst = make_instance(Graph(k0, std::move(edges), std::move(weights)),
                                  ProblemKind::Nwt, ParamKind::ComponentOrder);
    if (inst.k != k0) throw Error("planted_component_instance: parameter drifted");
    return inst;
}

// Star of degree exactly k0 inside a low-degree background graph.
inline Instance planted_maxdeg_instance(int k0, bool plant, std::uint64_t seed) {
    if (k0 < 8) throw Error("planted_maxdeg_instance: k0 >= 8 required");
    Rng rng(seed);
    int n = k0 + 16;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    auto add = [&](Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (u == v || !seen.insert(key).second) return;
        edges.push_back({u, v});
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    };
    for (Vertex v = 1; v <= k0; ++v) add(0, v);
    for (int tries = 0; tries < n; ++tries) {
        auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1))) + 1;
        auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1))) + 1;
        if (deg[static_cast<std::size_t>(u)] < 4 && deg[static_cast<std::size_t>(v)] < 4) add(u, v);
    }
    std::vector<std::int64_t> weights;
    weights.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) weights.push_back(rng.range(1, 9));
    if (plant) {
        add(1, 2);
        while (weights.size() < edges.size()) weights.push_back(1);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            Edge e = edges[i];
            bool in_triangle = (e.u == 0 && e.v <= 2) || (e.u == 1 && e.v == 2);
            if (in_triangle) weights[i] = -1;
        }
    }
    Instance inst = make_instance(Graph(n, std::move(edges), std::move(weights)),
                                  ProblemKind::Nwt, ParamKind::MaxDegree);
    if (inst.k != k0) throw Error("planted_maxdeg_instance: parameter drifted");
    return inst;
}

// Clique on k0+1 vertices plus a pendant path; degeneracy is exactly k0.
inline Instance planted_degeneracy_instance(int k0, bool plant, std::uint64_t seed) {
    if (k0 < 3) throw Error("planted_degeneracy_instance: k0 >= 3 required");
    Rng rng(seed);
    int n = k0 + 1 + 16;
    std::vector<Edge> edges;
    for (Vertex u = 0; u <= k0; ++u) {
        for (Vertex v = u + 1; v <= k0; ++v) edges.push_back({u, v});
    }
    for (Vertex v = k0 + 1; v < n; ++v) edges.push_back({v - 1 == k0 ? 0 : v - 1, v});
    std::vector<std::int64_t> weights;
    weights.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) weights.push_back(rng.range(1, 9));
    if (plant) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].v <= 2) weights[i] = -1;
        }
    }
    Instance inst = make_instance(Graph(n, std::move(edges), std::move(weights)),
                                  ProblemKind::Nwt, ParamKind::Degeneracy);
    if (inst.k != k0) throw Error("planted_degeneracy_instance: parameter drifted");
    return inst;
}

} // namespace kdim
