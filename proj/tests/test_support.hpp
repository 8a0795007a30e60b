#pragma once

// Shared helpers for the test suites: tiny graph builders, seeded random
// feasible sets, and independent brute-force evaluators used as oracles
// against the incremental implementations. The brute-force code works only
// from the Graph adjacency and the defining formulas.

#include <algorithm>
#include <random>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/rand_util.hpp"

namespace kplex::test {

inline Graph complete(Vertex n) {
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) es.emplace_back(a, b);
    return Graph(n, es);
}

inline Graph path(Vertex n) {
    std::vector<Edge> es;
    for (Vertex a = 0; a + 1 < n; ++a) es.emplace_back(a, a + 1);
    return Graph(n, es);
}

inline Graph cycle(Vertex n) {
    std::vector<Edge> es;
    for (Vertex a = 0; a + 1 < n; ++a) es.emplace_back(a, a + 1);
    if (n >= 3) es.emplace_back(n - 1, 0);
    return Graph(n, es);
}

/// Center 0 with `leaves` leaves.
inline Graph star(Vertex leaves) {
    std::vector<Edge> es;
    for (Vertex a = 1; a <= leaves; ++a) es.emplace_back(0, a);
    return Graph(leaves + 1, es);
}

inline Graph edgeless(Vertex n) { return Graph(n, {}); }

inline int brute_in_count(const Graph& g, const std::vector<Vertex>& s, Vertex v) {
    int c = 0;
    for (Vertex u : s) c += (u != v && g.adjacent(u, v)) ? 1 : 0;
    return c;
}

inline bool brute_feasible(const Graph& g, const std::vector<Vertex>& s, int k) {
    const int need = static_cast<int>(s.size()) - k;
    for (Vertex v : s) {
        if (brute_in_count(g, s, v) < need) return false;
    }
    return true;
}

/// Members with exactly |S| - k inside neighbors.
inline std::vector<Vertex> brute_critical(const Graph& g, const std::vector<Vertex>& s, int k) {
    std::vector<Vertex> c;
    const int th = static_cast<int>(s.size()) - k;
    for (Vertex v : s) {
        if (brute_in_count(g, s, v) == th) c.push_back(v);
    }
    std::sort(c.begin(), c.end());
    return c;
}

/// Direct set-builder evaluation of the four candidate classes, assigning
/// each outside vertex to the first matching class.
struct BruteClasses {
    std::vector<Vertex> add, swap_critical, swap_tight, force;
    std::vector<Vertex> partner;  // parallel to swap_critical
};

inline BruteClasses brute_classify(const Graph& g, const std::vector<Vertex>& s, int k) {
    BruteClasses out;
    const auto crit = brute_critical(g, s, k);
    const int th = static_cast<int>(s.size()) - k;
    const int lo = std::max(th, 0);
    const int hi = std::max(th + 1, 0);
    std::vector<char> in_s(g.num_vertices(), 0);
    for (Vertex v : s) in_s[v] = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (in_s[v]) continue;
        const int ic = brute_in_count(g, s, v);
        if (ic == 0) {  // not adjacent to the solution at all
            out.force.push_back(v);
            continue;
        }
        std::vector<Vertex> miss;
        for (Vertex u : crit) {
            if (!g.adjacent(u, v)) miss.push_back(u);
        }
        if (ic >= hi && miss.empty()) {
            out.add.push_back(v);
        } else if (ic >= lo && miss.size() == 1) {
            out.swap_critical.push_back(v);
            out.partner.push_back(miss.front());
        } else if (ic == lo && miss.empty()) {
            out.swap_tight.push_back(v);
        } else {
            out.force.push_back(v);
        }
    }
    return out;
}

/// Seeded random feasible k-plex grown by rejection.
inline std::vector<Vertex> random_feasible_set(const Graph& g, int k, std::mt19937_64& rng,
                                               int attempts = 64) {
    std::vector<Vertex> s;
    if (g.num_vertices() == 0) return s;
    for (int t = 0; t < attempts; ++t) {
        const auto v = static_cast<Vertex>(uniform_index(rng, g.num_vertices()));
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        s.push_back(v);
        if (!brute_feasible(g, s, k)) s.pop_back();
    }
    return s;
}

inline std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace kplex::test
