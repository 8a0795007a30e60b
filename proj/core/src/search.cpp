#include "kplex/search.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "kplex/rand_util.hpp"

namespace kplex {

namespace {

constexpr int kRetryCap = 50;  // rejected draws before a random move is forced

Vertex pick_uniform(std::span<const Vertex> xs, std::mt19937_64& rng) {
    return xs[uniform_index(rng, xs.size())];
}

/// Admissible gain candidates. With argmax_in_count, only those tied for the
/// highest in_count are kept (descent tie-breaking); otherwise all of them.
void collect_adds(SearchContext& ctx, std::vector<Vertex>& out, bool argmax_in_count) {
    out.clear();
    const KPlexState& st = ctx.state;
    const bool aspire = st.size() + 1 > ctx.best_size;
    int best_ic = -1;
    for (Vertex v : st.frontier()) {
        if (ctx.tabu.tabu(v) && !aspire) continue;
        if (st.classify_vertex(v) != MoveClass::kAdd) continue;
        if (!argmax_in_count) {
            out.push_back(v);
            continue;
        }
        const int ic = st.in_count(v);
        if (ic > best_ic) {
            best_ic = ic;
            out.clear();
            out.push_back(v);
        } else if (ic == best_ic) {
            out.push_back(v);
        }
    }
}

void apply_add(SearchContext& ctx, Vertex v) {
    ctx.state.insert(v);
    ctx.tabu.advance();
    if (ctx.observer) ctx.observer->on_move(ctx.state);
}

/// partner == npos means "draw the exchange partner from S \ N(v)".
void apply_exchange(SearchContext& ctx, Vertex v, Vertex partner, std::uint64_t pool) {
    KPlexState& st = ctx.state;
    if (partner == SparseSet::npos) {
        ctx.removed.clear();
        for (Vertex u : st.members()) {
            if (!st.graph().adjacent(u, v)) ctx.removed.push_back(u);
        }
        assert(!ctx.removed.empty());
        partner = pick_uniform(ctx.removed, ctx.rng);
    }
    const std::uint32_t tenure = ctx.tabu.exchange_tenure(pool, ctx.rng);
    st.swap_exchange(v, partner);
    ctx.tabu.ban(partner, tenure);
    ctx.tabu.advance();
    if (ctx.observer) ctx.observer->on_move(ctx.state);
}

void apply_force(SearchContext& ctx, Vertex v) {
    ctx.removed.clear();
    ctx.state.swap_force(v, ctx.tie_priority, ctx.removed);
    for (Vertex u : ctx.removed) ctx.tabu.ban(u, TabuList::kForcedTenure);
    ctx.tabu.advance();
    if (ctx.observer) ctx.observer->on_move(ctx.state);
}

/// One best-available move: gain beats neutral exchange beats forcing
/// insertion with minimum removals; uniform among ties. Falls back to the
/// soonest-expiring candidates when everything is tabu. Returns false when
/// no move exists at all (S == V).
bool directed_move(SearchContext& ctx) {
    KPlexState& st = ctx.state;
    if (st.outside().empty()) return false;
    const Vertex sz = st.size();

    collect_adds(ctx, ctx.cand, false);
    if (!ctx.cand.empty()) {
        apply_add(ctx, pick_uniform(ctx.cand, ctx.rng));
        return true;
    }

    // Neutral exchanges. The tenure pool counts every exchange candidate,
    // tabu or not.
    const bool aspire_keep = sz > ctx.best_size;
    std::uint64_t pool = 0;
    ctx.cand.clear();
    ctx.partner.clear();
    for (Vertex v : st.frontier()) {
        Vertex w = SparseSet::npos;
        switch (st.classify_vertex(v, &w)) {
            case MoveClass::kSwapCritical:
                ++pool;
                if (!ctx.tabu.tabu(v) || aspire_keep) {
                    ctx.cand.push_back(v);
                    ctx.partner.push_back(w);
                }
                break;
            case MoveClass::kSwapTight:
                ++pool;
                if (!ctx.tabu.tabu(v) || aspire_keep) {
                    ctx.cand.push_back(v);
                    ctx.partner.push_back(SparseSet::npos);
                }
                break;
            default:
                break;
        }
    }
    if (!ctx.cand.empty()) {
        const auto i = uniform_index(ctx.rng, ctx.cand.size());
        apply_exchange(ctx, ctx.cand[i], ctx.partner[i], pool);
        return true;
    }

    // Forcing insertions, fewest removals first. A tabu candidate can only
    // aspire with q < sz + 1 - best_size; when the incumbent is at least the
    // current size that is impossible and tabu candidates are skipped.
    ctx.cand.clear();
    int best_q = std::numeric_limits<int>::max();
    const int aspire_q_max = static_cast<int>(sz) - static_cast<int>(ctx.best_size);
    for (Vertex v : st.outside()) {
        if (st.classify_vertex(v) != MoveClass::kForce) continue;
        const bool is_tabu = ctx.tabu.tabu(v);
        if (is_tabu && aspire_q_max < 0) continue;
        int cap = best_q;
        if (is_tabu) cap = std::min(cap, aspire_q_max);
        const int q = st.force_removal_count(v, ctx.tie_priority, nullptr, cap);
        if (q > cap) continue;  // aborted: worse than the cap allows
        if (is_tabu && q > aspire_q_max) continue;
        if (q < best_q) {
            best_q = q;
            ctx.cand.clear();
            ctx.cand.push_back(v);
        } else if (q == best_q) {
            ctx.cand.push_back(v);
        }
    }
    if (!ctx.cand.empty()) {
        apply_force(ctx, pick_uniform(ctx.cand, ctx.rng));
        return true;
    }

    // Everything is tabu: use the soonest-expiring candidates and keep the
    // class preference among them.
    std::uint64_t soonest = std::numeric_limits<std::uint64_t>::max();
    ctx.cand.clear();
    for (Vertex v : st.outside()) {
        const std::uint64_t u = ctx.tabu.until(v);
        if (u < soonest) {
            soonest = u;
            ctx.cand.clear();
            ctx.cand.push_back(v);
        } else if (u == soonest) {
            ctx.cand.push_back(v);
        }
    }
    std::vector<Vertex> pool_cands = std::move(ctx.cand);
    ctx.cand.clear();
    int best_resulting = std::numeric_limits<int>::min();
    Vertex choice = SparseSet::npos;
    Vertex choice_partner = SparseSet::npos;
    MoveClass choice_class = MoveClass::kForce;
    std::uint64_t ties = 0;
    for (Vertex v : pool_cands) {
        Vertex w = SparseSet::npos;
        const MoveClass cls = st.classify_vertex(v, &w);
        int resulting = 0;
        switch (cls) {
            case MoveClass::kAdd: resulting = static_cast<int>(sz) + 1; break;
            case MoveClass::kSwapCritical:
            case MoveClass::kSwapTight: resulting = static_cast<int>(sz); break;
            case MoveClass::kForce:
                resulting = static_cast<int>(sz) + 1 - st.force_removal_count(v, ctx.tie_priority);
                break;
        }
        if (resulting > best_resulting) {
            best_resulting = resulting;
            ties = 1;
            choice = v;
            choice_partner = w;
            choice_class = cls;
        } else if (resulting == best_resulting &&
                   uniform_index(ctx.rng, ++ties) == 0) {  // reservoir tie-break
            choice = v;
            choice_partner = w;
            choice_class = cls;
        }
    }
    switch (choice_class) {
        case MoveClass::kAdd: apply_add(ctx, choice); break;
        case MoveClass::kSwapCritical: apply_exchange(ctx, choice, choice_partner, pool); break;
        case MoveClass::kSwapTight: apply_exchange(ctx, choice, SparseSet::npos, pool); break;
        case MoveClass::kForce: apply_force(ctx, choice); break;
    }
    return true;
}

/// One random kick from the gain/forcing classes with the quality threshold.
bool random_move(SearchContext& ctx, int threshold) {
    KPlexState& st = ctx.state;
    if (st.outside().empty()) return false;
    const Vertex sz = st.size();
    const bool aspire_add = sz + 1 > ctx.best_size;

    int rejections = 0;
    int attempts = 0;
    const int max_attempts = 8 * kRetryCap;
    Vertex best_v = SparseSet::npos;
    MoveClass best_cls = MoveClass::kForce;
    int best_resulting = std::numeric_limits<int>::min();

    auto apply = [&](Vertex v, MoveClass cls) {
        if (cls == MoveClass::kAdd) {
            apply_add(ctx, v);
        } else {
            apply_force(ctx, v);
        }
    };

    for (;;) {
        if (++attempts > max_attempts) break;  // sparse eligibility, scan instead
        const Vertex v = st.outside()[uniform_index(ctx.rng, st.outside().size())];
        const MoveClass cls = st.classify_vertex(v);
        if (cls == MoveClass::kSwapCritical || cls == MoveClass::kSwapTight) continue;
        int resulting;
        if (cls == MoveClass::kAdd) {
            if (ctx.tabu.tabu(v) && !aspire_add) continue;
            resulting = static_cast<int>(sz) + 1;
        } else {
            const int q = st.force_removal_count(v, ctx.tie_priority);
            resulting = static_cast<int>(sz) + 1 - q;
            if (ctx.tabu.tabu(v) && !(resulting > static_cast<int>(ctx.best_size))) continue;
        }
        if (resulting >= threshold) {
            apply(v, cls);
            return true;
        }
        if (resulting > best_resulting) {
            best_resulting = resulting;
            best_v = v;
            best_cls = cls;
        }
        if (++rejections >= kRetryCap) {
            apply(best_v, best_cls);
            return true;
        }
    }

    // Rejection sampling ran dry: enumerate the eligible vertices directly.
    ctx.cand.clear();
    for (Vertex v : st.outside()) {
        const MoveClass cls = st.classify_vertex(v);
        if (cls == MoveClass::kSwapCritical || cls == MoveClass::kSwapTight) continue;
        if (cls == MoveClass::kAdd && ctx.tabu.tabu(v) && !aspire_add) continue;
        if (cls == MoveClass::kForce && ctx.tabu.tabu(v)) {
            const int q = st.force_removal_count(v, ctx.tie_priority);
            if (!(static_cast<int>(sz) + 1 - q > static_cast<int>(ctx.best_size))) continue;
        }
        ctx.cand.push_back(v);
    }
    if (ctx.cand.empty()) {
        // No eligible kick at all; fall back to the directed rules.
        return directed_move(ctx);
    }
    best_v = SparseSet::npos;
    best_resulting = std::numeric_limits<int>::min();
    std::vector<Vertex> acceptable;
    for (Vertex v : ctx.cand) {
        const MoveClass cls = st.classify_vertex(v);
        const int resulting =
            cls == MoveClass::kAdd
                ? static_cast<int>(sz) + 1
                : static_cast<int>(sz) + 1 - st.force_removal_count(v, ctx.tie_priority);
        if (resulting >= threshold) acceptable.push_back(v);
        if (resulting > best_resulting) {
            best_resulting = resulting;
            best_v = v;
        }
    }
    const Vertex v = acceptable.empty() ? best_v : pick_uniform(acceptable, ctx.rng);
    apply(v, st.classify_vertex(v));
    return true;
}

}  // namespace

void intensify(SearchContext& ctx) {
    for (;;) {
        collect_adds(ctx, ctx.cand, true);
        if (ctx.cand.empty()) return;
        apply_add(ctx, pick_uniform(ctx.cand, ctx.rng));
    }
}

void perturb_directed(SearchContext& ctx, int moves) {
    for (int m = 0; m < moves; ++m) {
        if (ctx.stop()) return;
        if (!directed_move(ctx)) return;
    }
}

void perturb_random(SearchContext& ctx, int moves, int strength_pct) {
    const int threshold =
        static_cast<int>((static_cast<long long>(strength_pct) * ctx.state.size()) / 100);
    for (int m = 0; m < moves; ++m) {
        if (ctx.stop()) return;
        if (!random_move(ctx, threshold)) return;
    }
}

bool choose_directed(std::mt19937_64& rng, int directed_pct) {
    return static_cast<int>(uniform_index(rng, 100)) < directed_pct;
}

void diversify(SearchContext& ctx, int moves, int directed_pct, int strength_pct) {
    if (choose_directed(ctx.rng, directed_pct)) {
        perturb_directed(ctx, moves);
    } else {
        perturb_random(ctx, moves, strength_pct);
    }
}

}  // namespace kplex
