#include "kplex/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace kplex {

namespace {

constexpr int kMaxN = 30;

struct Searcher {
    int n;
    int k;
    std::array<std::uint64_t, kMaxN> adj{};  // in search order
    Vertex best = 0;

    // deficiency[v] = |S \ (N(v) u {v})| for the current S; a set is feasible
    // iff every member has deficiency <= k - 1, and a candidate may join iff
    // its own deficiency fits and every saturated member is adjacent to it.
    void rec(std::uint64_t s_mask, int s_size, std::uint64_t saturated,
             std::array<std::int8_t, kMaxN> def, std::uint64_t cand) {
        if (static_cast<Vertex>(s_size + std::popcount(cand)) <= best) return;
        if (cand == 0) {
            best = std::max(best, static_cast<Vertex>(s_size));
            return;
        }
        const int v = std::countr_zero(cand);
        const std::uint64_t vbit = std::uint64_t{1} << v;

        // include v
        {
            std::array<std::int8_t, kMaxN> d = def;
            std::uint64_t sat = saturated;
            std::uint64_t nonadj = ~adj[static_cast<std::size_t>(v)];
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                if (nonadj >> u & 1) {
                    if (++d[static_cast<std::size_t>(u)] == k - 1 &&
                        ((s_mask | vbit) >> u & 1)) {
                        sat |= std::uint64_t{1} << u;
                    }
                }
            }
            if ((d[static_cast<std::size_t>(v)] == k - 1)) sat |= vbit;
            std::uint64_t new_cand = 0;
            std::uint64_t rest = cand & ~vbit;
            while (rest) {
                const int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (d[static_cast<std::size_t>(w)] > k - 1) continue;
                if (sat & ~adj[static_cast<std::size_t>(w)]) continue;  // some tight member not adjacent
                new_cand |= std::uint64_t{1} << w;
            }
            rec(s_mask | vbit, s_size + 1, sat, d, new_cand);
        }
        // exclude v
        rec(s_mask, s_size, saturated, def, cand & ~vbit);
    }
};

bool subset_feasible(const std::vector<std::uint64_t>& adj, std::uint64_t mask, int k) {
    const int size = std::popcount(mask);
    std::uint64_t rest = mask;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (std::popcount(adj[static_cast<std::size_t>(v)] & mask) < size - k) return false;
    }
    return true;
}

}  // namespace

Vertex exact_max_kplex(const Graph& g, int k) {
    const int n = static_cast<int>(g.num_vertices());
    if (n > kMaxN) {
        throw std::invalid_argument("exact_max_kplex: more than 30 vertices");
    }
    if (k < 1) throw std::invalid_argument("exact_max_kplex: k must be positive");
    if (n == 0) return 0;

    // High-degree-first order tends to find big plexes early.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(static_cast<Vertex>(a)) > g.degree(static_cast<Vertex>(b));
    });
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    Searcher s;
    s.n = n;
    s.k = k;
    for (const auto& [u, v] : g.edges()) {
        const int a = rank[u];
        const int b = rank[v];
        s.adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        s.adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }

    // Greedy lower bound in search order.
    {
        std::vector<std::uint64_t> adj(s.adj.begin(), s.adj.begin() + n);
        std::uint64_t mask = 0;
        for (int v = 0; v < n; ++v) {
            if (subset_feasible(adj, mask | (std::uint64_t{1} << v), k)) {
                mask |= std::uint64_t{1} << v;
            }
        }
        s.best = static_cast<Vertex>(std::popcount(mask));
    }

    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    s.rec(0, 0, 0, {}, all);
    return s.best;
}

Vertex exact_max_kplex_exhaustive(const Graph& g, int k) {
    const int n = static_cast<int>(g.num_vertices());
    if (n > 16) throw std::invalid_argument("exhaustive oracle: more than 16 vertices");
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    Vertex best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<Vertex>(std::popcount(mask));
        if (size <= best) continue;
        if (subset_feasible(adj, mask, k)) best = size;
    }
    return best;
}

}  // namespace kplex
