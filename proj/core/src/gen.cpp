#include "kplex/gen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

#include "kplex/rand_util.hpp"

namespace kplex::gen {

Graph hamming(int bits, int min_dist) {
    if (bits < 1 || bits > 16) throw std::invalid_argument("hamming: bits must be in 1..16");
    if (min_dist < 1) throw std::invalid_argument("hamming: min_dist must be positive");
    const std::uint32_t n = 1u << bits;
    std::vector<Edge> edges;
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            if (std::popcount(a ^ b) >= min_dist) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

Graph johnson(int bits, int weight, int min_dist) {
    if (bits < 1 || bits > 32) throw std::invalid_argument("johnson: bits must be in 1..32");
    if (weight < 0 || weight > bits) throw std::invalid_argument("johnson: bad weight");
    if (min_dist < 1) throw std::invalid_argument("johnson: min_dist must be positive");
    std::vector<std::uint32_t> words;
    for (std::uint32_t w = 0; w < (1u << bits); ++w) {
        if (std::popcount(w) == weight) words.push_back(w);
    }
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(words.size());
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (std::popcount(words[i] ^ words[j]) >= min_dist) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

namespace {

using KellerTuple = std::array<int, 4>;

bool keller_adjacent(const KellerTuple& a, const KellerTuple& b) {
    bool opposite = false;
    int differing = 0;
    for (int i = 0; i < 4; ++i) {
        if (a[i] != b[i]) ++differing;
        if (((a[i] - b[i]) & 3) == 2) opposite = true;
    }
    return opposite && differing >= 2;
}

}  // namespace

Graph keller4() {
    const KellerTuple zero{0, 0, 0, 0};
    std::vector<KellerTuple> verts;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const KellerTuple t{a, b, c, d};
                    if (keller_adjacent(t, zero)) verts.push_back(t);
                }
    const auto n = static_cast<Vertex>(verts.size());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (keller_adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph mann_a9() {
    // STS(9) as the lines of the affine plane of order 3 over Z3 x Z3.
    using Point = std::pair<int, int>;
    std::vector<std::array<int, 3>> blocks;  // triples of point indices 0..8
    auto pid = [](int x, int y) { return 3 * x + y; };
    std::vector<std::array<int, 3>> seen;
    constexpr std::array<Point, 4> dirs{{{0, 1}, {1, 0}, {1, 1}, {1, 2}}};
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            for (const auto& [dx, dy] : dirs) {
                std::array<int, 3> blk{};
                for (int t = 0; t < 3; ++t) blk[t] = pid((x + t * dx) % 3, (y + t * dy) % 3);
                std::sort(blk.begin(), blk.end());
                if (std::find(blocks.begin(), blocks.end(), blk) == blocks.end()) {
                    blocks.push_back(blk);
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());

    // Vertices: one per (block, point) incidence, then one per point.
    struct V {
        int block;  // -1 for plain point vertices
        int point;
    };
    std::vector<V> vs;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        for (int p : blocks[b]) vs.push_back({b, p});
    }
    for (int p = 0; p < 9; ++p) vs.push_back({-1, p});

    auto adjacent = [](const V& a, const V& b) {
        if (a.block >= 0 && b.block >= 0) return a.block != b.block;
        if (a.block < 0 && b.block < 0) return true;
        const V& inc = a.block >= 0 ? a : b;
        const V& pt = a.block >= 0 ? b : a;
        return inc.point != pt.point;
    };

    const auto n = static_cast<Vertex>(vs.size());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (adjacent(vs[i], vs[j])) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph c_fat(Vertex n, int c) {
    if (n < 3 || c < 1) throw std::invalid_argument("c_fat: need n >= 3 and c >= 1");
    const auto groups = static_cast<Vertex>(
        static_cast<double>(n) / (static_cast<double>(c) * std::log(static_cast<double>(n))));
    if (groups < 1) throw std::invalid_argument("c_fat: c too large for n");
    const Vertex base = n / groups;
    const Vertex extra = n % groups;  // first `extra` groups get one more vertex
    std::vector<Vertex> group_of(n);
    Vertex v = 0;
    for (Vertex gidx = 0; gidx < groups; ++gidx) {
        const Vertex size = base + (gidx < extra ? 1 : 0);
        for (Vertex t = 0; t < size; ++t) group_of[v++] = gidx;
    }
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            const Vertex d = (group_of[b] + groups - group_of[a]) % groups;
            if (d == 0 || d == 1 || d == groups - 1) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

Graph gnp(Vertex n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (uniform_real(rng) < p) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

std::optional<Graph> by_name(std::string_view name) {
    if (name == "keller4") return keller4();
    if (name == "MANN_a9") return mann_a9();
    if (name == "hamming6-2") return hamming(6, 2);
    if (name == "hamming6-4") return hamming(6, 4);
    if (name == "hamming8-2") return hamming(8, 2);
    if (name == "hamming8-4") return hamming(8, 4);
    if (name == "hamming10-2") return hamming(10, 2);
    if (name == "hamming10-4") return hamming(10, 4);
    if (name == "johnson8-2-4") return johnson(8, 2, 4);
    if (name == "johnson8-4-4") return johnson(8, 4, 4);
    if (name == "johnson16-2-4") return johnson(16, 2, 4);
    if (name.rfind("c-fat", 0) == 0) {
        const auto rest = name.substr(5);
        const auto dash = rest.find('-');
        if (dash != std::string_view::npos) {
            try {
                const auto nn = static_cast<Vertex>(std::stoul(std::string(rest.substr(0, dash))));
                const int cc = std::stoi(std::string(rest.substr(dash + 1)));
                return c_fat(nn, cc);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

}  // namespace kplex::gen
