#pragma once

#include <chrono>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "kplex/state.hpp"
#include "kplex/tabu.hpp"

namespace kplex {

/// Wall-clock cutoff consulted between perturbation moves.
struct SearchLimits {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    bool expired() const {
        return deadline && std::chrono::steady_clock::now() >= *deadline;
    }
};

/// Test hook invoked after every applied move.
class MoveObserver {
public:
    virtual void on_move(const KPlexState& state) = 0;

protected:
    ~MoveObserver() = default;
};

/// Everything one search run threads through its move operators.
/// best_size is |S*|, used by the aspiration rule: a tabu vertex may enter
/// only when the move yields a solution strictly larger than best_size.
struct SearchContext {
    KPlexState& state;
    TabuList& tabu;
    std::mt19937_64& rng;
    std::span<const std::uint32_t> tie_priority;  // per-run priority for forced-removal ties
    Vertex best_size = 0;
    const SearchLimits* limits = nullptr;
    MoveObserver* observer = nullptr;

    // reusable scratch, contents meaningless between calls
    std::vector<Vertex> cand;
    std::vector<Vertex> partner;
    std::vector<Vertex> removed;

    bool stop() const { return limits && limits->expired(); }
};

/// Descent: repeatedly inserts an admissible gain vertex until none remains.
/// Candidates are filtered by the tabu list (aspiration applies); ties among
/// the maximum-in_count candidates break uniformly at random. Never shrinks
/// the solution.
void intensify(SearchContext& ctx);

/// Applies `moves` swaps, each the admissible move with the best resulting
/// size: gain moves first, then neutral (1,1) exchanges, then the forcing
/// insertion with the fewest removals; ties break uniformly. Vertices
/// removed by an exchange get the randomized exchange tenure, vertices
/// removed by a forcing move the fixed tenure. When every candidate is tabu
/// and aspiration does not apply, the soonest-expiring candidates are used.
void perturb_directed(SearchContext& ctx, int moves);

/// Applies `moves` swaps drawn uniformly from the gain and forcing classes.
/// A draw is accepted when the resulting size is at least
/// floor(strength_pct/100 * entry_size), where entry_size is |S| at call
/// time; after 50 rejected draws the best rejected candidate is forced.
void perturb_random(SearchContext& ctx, int moves, int strength_pct);

/// The operator draw behind diversify: true with probability
/// directed_pct/100, consuming one generator step.
bool choose_directed(std::mt19937_64& rng, int directed_pct);

/// One perturbation phase: with probability directed_pct/100 delegates to
/// perturb_directed, otherwise to perturb_random with strength_pct.
void diversify(SearchContext& ctx, int moves, int directed_pct, int strength_pct);

}  // namespace kplex
