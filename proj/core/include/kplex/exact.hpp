#pragma once

#include "kplex/graph.hpp"

namespace kplex {

/// Exact maximum k-plex cardinality by branch and bound over vertex
/// inclusion with incremental feasibility filtering. Meant for verification
/// at toy scale: graphs with more than 30 vertices are rejected
/// (std::invalid_argument).
Vertex exact_max_kplex(const Graph& g, int k);

/// Exhaustive subset enumeration, n <= 16. Cross-checks the branch and
/// bound in tests.
Vertex exact_max_kplex_exhaustive(const Graph& g, int k);

}  // namespace kplex
