#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/rand_util.hpp"

namespace kplex {

/// Per-vertex re-entry bans keyed to a global move counter (one tick per
/// applied swap, shared by descent and perturbation). A vertex is tabu
/// exactly while move_counter < until(v); entries expire on their own.
class TabuList {
public:
    static constexpr std::uint32_t kForcedTenure = 7;     // removals of destructive swaps
    static constexpr std::uint32_t kExchangeBase = 7;     // base for (1,1) removals

    explicit TabuList(Vertex n) : until_(n, 0) {}

    std::uint64_t move_counter() const { return moves_; }
    void advance() { ++moves_; }

    bool tabu(Vertex v) const { return moves_ < until_[v]; }
    std::uint64_t until(Vertex v) const { return until_[v]; }

    void ban(Vertex v, std::uint32_t tenure) { until_[v] = moves_ + tenure; }

    /// Tenure for a vertex displaced by a (1,1) exchange:
    /// kExchangeBase + uniform{1..swap_pool}, where swap_pool is the number
    /// of exchange candidates at assignment time.
    std::uint32_t exchange_tenure(std::uint64_t swap_pool, std::mt19937_64& rng) const {
        const std::uint64_t span = swap_pool == 0 ? 1 : swap_pool;
        return kExchangeBase + 1 + static_cast<std::uint32_t>(uniform_index(rng, span));
    }

private:
    std::uint64_t moves_ = 0;
    std::vector<std::uint64_t> until_;
};

}  // namespace kplex
