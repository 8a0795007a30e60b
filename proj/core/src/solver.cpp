#include "kplex/solver.hpp"

#include <chrono>
#include <numeric>

#include "kplex/rand_util.hpp"

namespace kplex {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Start from a random vertex and keep adding random gain vertices until
/// none remains.
void greedy_construct(SearchContext& ctx) {
    KPlexState& st = ctx.state;
    const Vertex n = st.graph().num_vertices();
    if (n == 0) return;
    st.insert(static_cast<Vertex>(uniform_index(ctx.rng, n)));
    ctx.tabu.advance();
    for (;;) {
        ctx.cand.clear();
        for (Vertex v : st.frontier()) {
            if (st.classify_vertex(v) == MoveClass::kAdd) ctx.cand.push_back(v);
        }
        if (ctx.cand.empty()) return;
        st.insert(ctx.cand[uniform_index(ctx.rng, ctx.cand.size())]);
        ctx.tabu.advance();
    }
}

SolverResult solve_impl(const Graph& g, int k, const Budget& budget,
                        std::uint64_t seed, const SolverOptions& opts, bool adaptive) {
    opts.controller.validate();
    const auto t0 = Clock::now();

    SolverResult res;
    if (g.num_vertices() == 0) return res;

    std::mt19937_64 rng(seed);
    KPlexState state(g, k, rng());
    TabuList tabu(g.num_vertices());

    // Per-run priority permutation breaking forced-removal ties.
    std::vector<std::uint32_t> prio(g.num_vertices());
    std::iota(prio.begin(), prio.end(), 0u);
    for (std::size_t i = prio.size(); i > 1; --i) {
        std::swap(prio[i - 1], prio[uniform_index(rng, i)]);
    }

    SearchLimits limits;
    if (budget.time_seconds) {
        limits.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*budget.time_seconds));
    }

    SearchContext ctx{state, tabu, rng, prio, 0, &limits, opts.observer};

    auto record_best = [&](const KPlexState& s) {
        res.best_set.assign(s.members().begin(), s.members().end());
        res.best_size = s.size();
        res.time_to_best_seconds = seconds_since(t0);
        res.iteration_of_best = res.iterations;
        ctx.best_size = s.size();
        if (budget.target && res.best_size >= *budget.target) {
            limits.deadline = t0;  // target reached: expire every phase
        }
    };

    greedy_construct(ctx);
    record_best(state);

    std::optional<Controller> controller;
    if (adaptive) {
        auto pre = prelearn(ctx, opts.controller,
                            [&](const KPlexState& s) { record_best(s); });
        res.prelearn_iterations = pre.iterations;
        controller.emplace(opts.controller, std::move(pre.ranked), std::move(pre.memory));
    }

    const auto depths = perturbation_depths();
    std::uint64_t since_update = 0;

    for (;;) {
        if (budget.iterations && res.iterations >= *budget.iterations) break;
        if (budget.target && res.best_size >= *budget.target) break;
        if (limits.expired()) break;

        ParameterTriple triple;
        int slot = -1;
        if (adaptive) {
            std::tie(triple, slot) = controller->select(rng);
        } else {
            triple.moves = depths[uniform_index(rng, depths.size())];
            triple.directed_pct = 95 + static_cast<int>(uniform_index(rng, 6));
            triple.strength_pct = 70 + static_cast<int>(uniform_index(rng, 21));
        }

        diversify(ctx, triple.moves, triple.directed_pct, triple.strength_pct);
        intensify(ctx);

        if (state.size() > res.best_size) record_best(state);

        double reward = 0.0;
        if (adaptive) {
            reward = controller->compute_reward(state.hash(), state.size(), slot,
                                                res.best_size);
            controller->apply_reward(slot, reward);
            if (since_update > opts.controller.epsilon) {
                controller->update_learning_list(rng);
                since_update = 0;
            }
            ++since_update;
        }
        if (opts.trace) res.trace.push_back({res.iterations, triple, reward});
        ++res.iterations;
    }

    res.moves = tabu.move_counter();
    // From-scratch feasibility check of the returned solution.
    KPlexState verify(g, k, res.best_set);
    (void)verify;
    return res;
}

}  // namespace

SolverResult solve_rle(const Graph& g, int k, const Budget& budget, std::uint64_t seed,
                       const SolverOptions& opts) {
    return solve_impl(g, k, budget, seed, opts, true);
}

SolverResult solve_rnd(const Graph& g, int k, const Budget& budget, std::uint64_t seed,
                       const SolverOptions& opts) {
    return solve_impl(g, k, budget, seed, opts, false);
}

}  // namespace kplex
