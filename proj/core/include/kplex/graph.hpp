#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kplex {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph. Vertices are 0-based internally;
/// the DIMACS layer converts from/to the external 1-based numbering.
///
/// Adjacency is stored both as sorted lists (iteration) and, for graphs with
/// at most kBitsetLimit vertices, as per-vertex bitsets (O(1) membership).
/// Larger graphs answer membership queries by binary search.
///
/// Safe to share read-only across concurrent solver runs.
class Graph {
public:
    static constexpr Vertex kBitsetLimit = 8192;

    Graph() = default;

    /// Builds a graph from an edge list. Self-loops are rejected
    /// (std::invalid_argument), duplicates and reversed duplicates collapse,
    /// out-of-range endpoints are rejected (std::out_of_range).
    Graph(Vertex n, std::span<const Edge> edge_list);

    Vertex num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    /// Sorted neighbor list of v. Throws std::out_of_range for bad v.
    std::span<const Vertex> neighbors(Vertex v) const;

    Vertex degree(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Canonical edge list: u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_bitsets() const { return !bits_.empty(); }

private:
    void check_vertex(Vertex v) const;
    bool bit_test(Vertex u, Vertex v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) & 1u;
    }

    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;  // CSR offsets, size n_+1
    std::vector<Vertex> flat_;          // concatenated sorted neighbor lists
    std::size_t words_ = 0;             // bitset words per vertex
    std::vector<std::uint64_t> bits_;   // n_*words_ when n_ <= kBitsetLimit
};

}  // namespace kplex
