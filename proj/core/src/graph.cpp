#include "kplex/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kplex {

Graph::Graph(Vertex n, std::span<const Edge> edge_list) : n_(n) {
    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a >= n_ || b >= n_) {
            throw std::out_of_range("edge endpoint " +
                                    std::to_string(a >= n_ ? a : b) +
                                    " outside vertex range");
        }
        if (a == b) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        }
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::size_t> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    flat_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        flat_[fill[u]++] = v;
        flat_[fill[v]++] = u;
    }
    for (Vertex v = 0; v < n_; ++v) {
        std::sort(flat_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  flat_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }

    if (n_ > 0 && n_ <= kBitsetLimit) {
        words_ = (static_cast<std::size_t>(n_) + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (const auto& [u, v] : edges_) {
            bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
                std::uint64_t{1} << (v & 63);
            bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |=
                std::uint64_t{1} << (u & 63);
        }
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " outside range [0, " + std::to_string(n_) + ")");
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return {flat_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

Vertex Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (!bits_.empty()) return bit_test(u, v);
    const auto nb = neighbors(degree(u) <= degree(v) ? u : v);
    const Vertex target = degree(u) <= degree(v) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), target);
}

}  // namespace kplex
