#include "kplex/state.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "kplex/rand_util.hpp"

namespace kplex {

KPlexState::KPlexState(const Graph& g, int k, std::uint64_t hash_seed) : k_(k) {
    init(g, hash_seed);
}

KPlexState::KPlexState(const Graph& g, int k, std::span<const Vertex> initial,
                       std::uint64_t hash_seed)
    : k_(k) {
    init(g, hash_seed);
    for (Vertex v : initial) {
        if (v >= g.num_vertices()) {
            throw std::invalid_argument("initial set: vertex " + std::to_string(v) +
                                        " out of range");
        }
        if (members_.contains(v)) {
            throw std::invalid_argument("initial set: duplicate vertex " +
                                        std::to_string(v));
        }
        raw_insert(v);
    }
    if (!feasible()) {
        throw std::invalid_argument("initial set is not a feasible " +
                                    std::to_string(k_) + "-plex");
    }
}

void KPlexState::init(const Graph& g, std::uint64_t hash_seed) {
    if (k_ < 1) throw std::invalid_argument("k must be positive");
    g_ = &g;
    const Vertex n = g.num_vertices();
    members_ = SparseSet(n);
    outside_ = SparseSet(n);
    frontier_ = SparseSet(n);
    in_count_.assign(n, 0);
    bucket_head_.assign(n == 0 ? 1 : n, -1);
    link_next_.assign(n, -1);
    link_prev_.assign(n, -1);
    bucket_size_.assign(n == 0 ? 1 : n, 0);
    for (Vertex v = 0; v < n; ++v) outside_.add(v);

    std::uint64_t s = hash_seed;
    empty_hash_ = splitmix64(s);
    hash_ = empty_hash_;
    zobrist_.resize(n);
    for (Vertex v = 0; v < n; ++v) zobrist_[v] = splitmix64(s);
}

void KPlexState::bucket_add(Vertex v, int c) {
    const std::int32_t head = bucket_head_[static_cast<std::size_t>(c)];
    link_next_[v] = head;
    link_prev_[v] = -1;
    if (head >= 0) link_prev_[static_cast<Vertex>(head)] = static_cast<std::int32_t>(v);
    bucket_head_[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(v);
    ++bucket_size_[static_cast<std::size_t>(c)];
}

void KPlexState::bucket_remove(Vertex v, int c) {
    const std::int32_t nxt = link_next_[v];
    const std::int32_t prv = link_prev_[v];
    if (nxt >= 0) link_prev_[static_cast<Vertex>(nxt)] = prv;
    if (prv >= 0) {
        link_next_[static_cast<Vertex>(prv)] = nxt;
    } else {
        bucket_head_[static_cast<std::size_t>(c)] = nxt;
    }
    link_next_[v] = link_prev_[v] = -1;
    --bucket_size_[static_cast<std::size_t>(c)];
}

void KPlexState::bucket_move(Vertex v, int from, int to) {
    bucket_remove(v, from);
    bucket_add(v, to);
}

void KPlexState::raw_insert(Vertex v) {
    assert(!members_.contains(v));
    const int th_old = threshold();

    outside_.remove(v);
    if (frontier_.contains(v)) frontier_.remove(v);
    members_.add(v);
    bucket_add(v, in_count_[v]);
    if (th_old > 0 && in_count_[v] < th_old) ++below_;

    // |S| grew: members sitting exactly at the old threshold now violate.
    const int th_new = th_old + 1;
    if (th_old >= 0) below_ += bucket_size_[static_cast<std::size_t>(th_old)];

    for (Vertex u : g_->neighbors(v)) {
        const int c = ++in_count_[u];
        if (members_.contains(u)) {
            bucket_move(u, c - 1, c);
            if (c == th_new) --below_;
        } else if (c == 1) {
            frontier_.add(u);
        }
    }
    hash_ ^= zobrist_[v];
}

void KPlexState::raw_remove(Vertex v) {
    assert(members_.contains(v));
    const int th_old = threshold();

    for (Vertex u : g_->neighbors(v)) {
        if (members_.contains(u)) {
            const int c = in_count_[u];
            if (c == th_old) ++below_;
            bucket_move(u, c, c - 1);
            --in_count_[u];
        } else {
            if (--in_count_[u] == 0) frontier_.remove(u);
        }
    }

    // |S| shrank: members sitting exactly at the new threshold stop violating.
    const int th_new = th_old - 1;
    if (th_new >= 0) below_ -= bucket_size_[static_cast<std::size_t>(th_new)];

    bucket_remove(v, in_count_[v]);
    if (th_new > 0 && in_count_[v] < th_new) --below_;
    members_.remove(v);
    outside_.add(v);
    if (in_count_[v] > 0) frontier_.add(v);
    hash_ ^= zobrist_[v];
}

void KPlexState::insert(Vertex v) {
    if (v >= g_->num_vertices()) throw std::out_of_range("insert: vertex out of range");
    if (members_.contains(v)) throw std::invalid_argument("insert: vertex already in solution");
    raw_insert(v);
    assert(feasible() && "insert broke k-plex feasibility");
}

void KPlexState::remove(Vertex v) {
    if (v >= g_->num_vertices()) throw std::out_of_range("remove: vertex out of range");
    if (!members_.contains(v)) throw std::invalid_argument("remove: vertex not in solution");
    raw_remove(v);
    assert(feasible());
}

Vertex KPlexState::critical_count() const {
    const int th = threshold();
    if (th < 0) return 0;
    return bucket_size_[static_cast<std::size_t>(th)];
}

void KPlexState::critical_vertices(std::vector<Vertex>& out) const {
    out.clear();
    const int th = threshold();
    if (th < 0) return;
    for (std::int32_t v = bucket_head_[static_cast<std::size_t>(th)]; v >= 0;
         v = link_next_[static_cast<Vertex>(v)]) {
        out.push_back(static_cast<Vertex>(v));
    }
}

int KPlexState::missing_critical(Vertex v, Vertex* witness) const {
    const int th = threshold();
    if (th < 0) return 0;
    int miss = 0;
    for (std::int32_t u = bucket_head_[static_cast<std::size_t>(th)]; u >= 0;
         u = link_next_[static_cast<Vertex>(u)]) {
        if (!g_->adjacent(static_cast<Vertex>(u), v)) {
            if (++miss > 1) return miss;
            if (witness) *witness = static_cast<Vertex>(u);
        }
    }
    return miss;
}

MoveClass KPlexState::classify_vertex(Vertex v, Vertex* swap_partner) const {
    assert(!members_.contains(v));
    const int ic = in_count_[v];
    if (ic == 0) return MoveClass::kForce;  // not in N(S)

    const int th = threshold();
    const int lo = std::max(th, 0);
    const int hi = std::max(th + 1, 0);

    Vertex witness = 0;
    const int miss = missing_critical(v, &witness);
    if (miss == 0 && ic >= hi) return MoveClass::kAdd;
    if (miss == 1 && ic >= lo) {
        if (swap_partner) *swap_partner = witness;
        return MoveClass::kSwapCritical;
    }
    if (miss == 0 && ic == lo) return MoveClass::kSwapTight;
    return MoveClass::kForce;
}

void KPlexState::classify(NeighborhoodSets& out) const {
    out.clear();
    for (Vertex v : outside_) {
        Vertex partner = 0;
        switch (classify_vertex(v, &partner)) {
            case MoveClass::kAdd: out.add.push_back(v); break;
            case MoveClass::kSwapCritical:
                out.swap_critical.push_back(v);
                out.swap_critical_partner.push_back(partner);
                break;
            case MoveClass::kSwapTight: out.swap_tight.push_back(v); break;
            case MoveClass::kForce: out.force.push_back(v); break;
        }
    }
}

void KPlexState::swap_exchange(Vertex v_in, Vertex u_out) {
    if (!members_.contains(u_out)) throw std::invalid_argument("swap_exchange: u_out not in solution");
    if (members_.contains(v_in)) throw std::invalid_argument("swap_exchange: v_in already in solution");
    raw_remove(u_out);
    raw_insert(v_in);
    assert(feasible() && "exchange broke k-plex feasibility");
}

void KPlexState::swap_force(Vertex v_in, std::span<const std::uint32_t> tie_priority,
                            std::vector<Vertex>& removed) {
    if (members_.contains(v_in)) throw std::invalid_argument("swap_force: v_in already in solution");
    raw_insert(v_in);
    while (below_ > 0) {
        Vertex victim = SparseSet::npos;
        for (Vertex u : members_) {
            if (u == v_in || g_->adjacent(u, v_in)) continue;
            if (victim == SparseSet::npos || in_count_[u] < in_count_[victim] ||
                (in_count_[u] == in_count_[victim] &&
                 tie_priority[u] < tie_priority[victim])) {
                victim = u;
            }
        }
        assert(victim != SparseSet::npos &&
               "infeasible with no removable non-neighbor left");
        raw_remove(victim);
        removed.push_back(victim);
    }
}

int KPlexState::force_removal_count(Vertex v_in,
                                    std::span<const std::uint32_t> tie_priority,
                                    std::vector<Vertex>* removed, int limit) const {
    assert(!members_.contains(v_in));
    // Simulate on scratch copies: the cascade touches only current members.
    thread_local std::vector<Vertex> live;
    thread_local std::vector<int> ic;
    thread_local std::vector<char> adj_vin;
    live.assign(members_.begin(), members_.end());
    ic.resize(live.size());
    adj_vin.resize(live.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
        ic[i] = in_count_[live[i]];
        adj_vin[i] = g_->adjacent(live[i], v_in) ? 1 : 0;
        if (adj_vin[i]) ++ic[i];
    }
    const int vin_count = in_count_[v_in];
    int sz = static_cast<int>(live.size()) + 1;
    int q = 0;
    for (;;) {
        const int th = sz - k_;
        bool ok = vin_count >= th;
        for (std::size_t i = 0; ok && i < live.size(); ++i) ok = ic[i] >= th;
        if (ok) break;
        if (q >= limit) return limit + 1;
        std::size_t victim = live.size();
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (adj_vin[i]) continue;
            if (victim == live.size() || ic[i] < ic[victim] ||
                (ic[i] == ic[victim] && tie_priority[live[i]] < tie_priority[live[victim]])) {
                victim = i;
            }
        }
        assert(victim != live.size());
        const Vertex w = live[victim];
        if (removed) removed->push_back(w);
        live[victim] = live.back();
        live.pop_back();
        ic[victim] = ic.back();
        ic.pop_back();
        adj_vin[victim] = adj_vin.back();
        adj_vin.pop_back();
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (g_->adjacent(live[i], w)) --ic[i];
        }
        --sz;
        ++q;
    }
    return q;
}

void KPlexState::validate() const {
    const Vertex n = g_->num_vertices();
    auto fail = [](const std::string& what) { throw std::logic_error("KPlexState::validate: " + what); };

    if (members_.size() + outside_.size() != n) fail("members/outside do not partition V");
    for (Vertex v = 0; v < n; ++v) {
        if (members_.contains(v) == outside_.contains(v)) fail("membership overlap");
        int cnt = 0;
        for (Vertex u : g_->neighbors(v)) cnt += members_.contains(u) ? 1 : 0;
        if (cnt != in_count_[v]) {
            fail("in_count mismatch at vertex " + std::to_string(v));
        }
        if (!members_.contains(v)) {
            if (frontier_.contains(v) != (cnt > 0)) fail("frontier mismatch");
        } else if (frontier_.contains(v)) {
            fail("member in frontier");
        }
    }
    const int th = threshold();
    Vertex below = 0;
    for (Vertex v : members_) {
        if (in_count_[v] < th) ++below;
    }
    if (below != below_) fail("violation counter mismatch");

    std::vector<Vertex> bucket_seen(n == 0 ? 1 : n, 0);
    for (Vertex v : members_) ++bucket_seen[static_cast<std::size_t>(in_count_[v])];
    for (std::size_t c = 0; c < bucket_size_.size(); ++c) {
        if (bucket_size_[c] != bucket_seen[c]) fail("bucket size mismatch");
        Vertex walked = 0;
        for (std::int32_t v = bucket_head_[c]; v >= 0; v = link_next_[static_cast<Vertex>(v)]) {
            if (!members_.contains(static_cast<Vertex>(v))) fail("non-member in bucket");
            if (in_count_[static_cast<Vertex>(v)] != static_cast<int>(c)) fail("bucket key mismatch");
            ++walked;
        }
        if (walked != bucket_size_[c]) fail("bucket chain length mismatch");
    }

    std::uint64_t expected = empty_hash_;
    for (Vertex v : members_) expected ^= zobrist_[v];
    if (expected != hash_) fail("hash mismatch");
}

}  // namespace kplex
