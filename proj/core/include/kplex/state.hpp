#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/sparse_set.hpp"

namespace kplex {

/// How a vertex outside the current solution can enter it.
enum class MoveClass : std::uint8_t {
    kAdd,           // insertable as-is, |S| grows by one
    kSwapCritical,  // one specific tight member must leave in exchange
    kSwapTight,     // an exchange partner is drawn from the non-neighbors in S
    kForce,         // insertion forces removals until feasibility returns
};

/// The four candidate sets partitioning the vertices outside S.
struct NeighborhoodSets {
    std::vector<Vertex> add;
    std::vector<Vertex> swap_critical;
    std::vector<Vertex> swap_critical_partner;  // the unique tight non-neighbor, parallel to swap_critical
    std::vector<Vertex> swap_tight;
    std::vector<Vertex> force;

    void clear() {
        add.clear();
        swap_critical.clear();
        swap_critical_partner.clear();
        swap_tight.clear();
        force.clear();
    }
};

/// A feasible k-plex maintained incrementally under single-vertex moves.
///
/// Invariants (checked by validate()):
///   - every member v satisfies |N(v) & S| >= |S| - k;
///   - in_count(v) == |N(v) & S| for every vertex v;
///   - the tight members (in_count == |S| - k) are exactly the critical set;
///   - frontier() holds exactly the outside vertices with in_count > 0.
///
/// Insert/remove cost O(deg(v)). The critical set is the in_count bucket at
/// the feasibility threshold, so classification never rescans S.
///
/// A state is owned by one search thread; several states may share a Graph.
class KPlexState {
public:
    KPlexState(const Graph& g, int k, std::uint64_t hash_seed = 0);

    /// Starts from a given solution. Throws std::invalid_argument if the set
    /// is not a feasible k-plex (or contains duplicates).
    KPlexState(const Graph& g, int k, std::span<const Vertex> initial,
               std::uint64_t hash_seed = 0);

    const Graph& graph() const { return *g_; }
    int k() const { return k_; }

    Vertex size() const { return members_.size(); }
    bool contains(Vertex v) const { return members_.contains(v); }
    std::span<const Vertex> members() const { return members_.values(); }
    std::span<const Vertex> outside() const { return outside_.values(); }
    /// Outside vertices adjacent to at least one member (N(S)).
    std::span<const Vertex> frontier() const { return frontier_.values(); }

    int in_count(Vertex v) const { return in_count_[v]; }
    bool feasible() const { return below_ == 0; }

    /// Feasibility threshold |S| - k (may be negative).
    int threshold() const { return static_cast<int>(size()) - k_; }

    bool is_critical(Vertex v) const {
        return members_.contains(v) && in_count_[v] == threshold();
    }
    Vertex critical_count() const;
    void critical_vertices(std::vector<Vertex>& out) const;

    /// Number of critical vertices not adjacent to v, early-exiting at 2.
    /// With exactly one miss, *witness receives it.
    int missing_critical(Vertex v, Vertex* witness = nullptr) const;

    MoveClass classify_vertex(Vertex v, Vertex* swap_partner = nullptr) const;
    void classify(NeighborhoodSets& out) const;

    /// Adds v; the caller guarantees feasibility is preserved
    /// (MoveClass::kAdd membership or an explicit check). Debug builds assert.
    void insert(Vertex v);
    /// Removes a member. The state stays feasible (removals never violate).
    void remove(Vertex v);

    /// (1,1) exchange: removes u_out, inserts v_in. Feasible for any
    /// kSwapCritical candidate with its partner, or kSwapTight candidate with
    /// any non-neighbor member.
    void swap_exchange(Vertex v_in, Vertex u_out);

    /// Forcing insertion: adds v_in, then repeatedly removes the non-neighbor
    /// member with minimum in_count (ties resolved by lowest tie_priority)
    /// until feasible. Removed vertices are appended to `removed`.
    void swap_force(Vertex v_in, std::span<const std::uint32_t> tie_priority,
                    std::vector<Vertex>& removed);

    /// Simulates swap_force without mutating; returns the number of removals.
    /// Stops early and returns limit + 1 once more than `limit` removals are
    /// needed.
    int force_removal_count(Vertex v_in, std::span<const std::uint32_t> tie_priority,
                            std::vector<Vertex>* removed = nullptr,
                            int limit = INT32_MAX) const;

    /// Order-independent digest of the member set; empty set hashes to a
    /// constant derived from hash_seed.
    std::uint64_t hash() const { return hash_; }

    /// Recomputes everything from scratch and throws std::logic_error on any
    /// mismatch with the incremental bookkeeping.
    void validate() const;

private:
    void init(const Graph& g, std::uint64_t hash_seed);
    void bucket_add(Vertex v, int c);
    void bucket_remove(Vertex v, int c);
    void bucket_move(Vertex v, int from, int to);
    void raw_insert(Vertex v);
    void raw_remove(Vertex v);

    const Graph* g_ = nullptr;
    int k_ = 1;
    SparseSet members_;
    SparseSet outside_;
    SparseSet frontier_;
    std::vector<int> in_count_;

    // members linked into doubly-linked lists keyed by in_count value
    std::vector<std::int32_t> bucket_head_;
    std::vector<std::int32_t> link_next_;
    std::vector<std::int32_t> link_prev_;
    std::vector<Vertex> bucket_size_;
    Vertex below_ = 0;  // members violating in_count >= |S| - k

    std::vector<std::uint64_t> zobrist_;
    std::uint64_t empty_hash_ = 0;
    std::uint64_t hash_ = 0;
};

}  // namespace kplex
