#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "kplex/graph.hpp"

namespace kplex::gen {

/// Hamming graph on bit strings of the given length: vertices are the
/// 2^bits binary words, adjacent when their Hamming distance is at least
/// min_dist. hamming(6, 2) and hamming(6, 4) rebuild the classic benchmark
/// graphs of the same names exactly (up to vertex order).
Graph hamming(int bits, int min_dist);

/// Johnson graph on the weight-w binary words of the given length, adjacent
/// when the Hamming distance is at least min_dist. johnson(8, 2, 4) and
/// johnson(8, 4, 4) rebuild the classic benchmark graphs.
Graph johnson(int bits, int weight, int min_dist);

/// The 171-vertex reduced Keller graph of dimension 4: the subgraph of the
/// full Keller graph over {0,1,2,3}^4 induced by the neighbors of the zero
/// tuple (fixing one clique member by vertex transitivity). Matches the
/// benchmark keller4 (n=171, m=9435).
Graph keller4();

/// Clique graph of the covering problem over the unique Steiner triple
/// system on 9 points: one vertex per (block, point) incidence plus one per
/// point; all pairs adjacent except incidences sharing a block and each
/// point with its own incidences. Matches the benchmark MANN_a9
/// (n=45, m=918).
Graph mann_a9();

/// Ring-of-cliques fault-diagnosis graph: floor(n / (c * ln n)) consecutive
/// vertex groups arranged in a cycle, sizes as equal as possible with the
/// larger groups first; vertices are adjacent when their groups are equal
/// or cyclically adjacent. Rebuilds the c-fat benchmark family (verified
/// against the published vertex/edge counts of all seven instances).
Graph c_fat(Vertex n, int c);

/// Erdos-Renyi G(n, p) with a seeded generator; deterministic per seed.
Graph gnp(Vertex n, double p, std::uint64_t seed);

/// Builds a benchmark graph from its conventional instance name
/// ("hamming6-2", "johnson8-4-4", "keller4", "MANN_a9", "c-fat200-1", ...).
/// Returns nullopt for names this generator cannot rebuild.
std::optional<Graph> by_name(std::string_view name);

}  // namespace kplex::gen
