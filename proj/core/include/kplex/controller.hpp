#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "kplex/search.hpp"

namespace kplex {

/// One perturbation action: depth l, directed-operator probability e (%),
/// random-kick strength b (%).
struct ParameterTriple {
    int moves = 2;           // l
    int directed_pct = 95;   // e
    int strength_pct = 70;   // b
    std::uint32_t lex_index = 0;  // position in the canonical enumeration

    friend bool operator==(const ParameterTriple&, const ParameterTriple&) = default;
};

/// The 33 admissible perturbation depths: 2..31 linearly, then 32, 64, 128.
std::vector<int> perturbation_depths();

/// Full action space: every (l, e, b) with e in 95..100 and b in 70..90,
/// ordered lexicographically by (depth index, e, b). 33*6*21 = 4158 triples.
std::vector<ParameterTriple> generate_space();

struct ControllerConfig {
    int kappa = 6;               // size of the active action list
    int alpha = 100;             // prelearning rounds per triple
    double tau = 2.0;            // softmax temperature
    std::uint64_t epsilon = 4000;  // iterations between learning-list updates
    double delta1 = 2.0;         // distance reward coefficient
    double delta2 = 1.0;         // quality reward coefficient
    std::size_t window = 100;    // rewards kept per action
    std::size_t n_prune = 2375;  // ranked triples kept after prelearning

    enum class QualityMode { kVerbatim, kRatio };
    QualityMode quality_mode = QualityMode::kVerbatim;

    enum class ReplacementMode { kArgmax, kSample };
    ReplacementMode replacement_mode = ReplacementMode::kArgmax;

    std::size_t lo_hash_cap = 0;  // visited-optima table cap, 0 = unbounded

    void validate() const;  // throws std::invalid_argument
};

/// Flat key=value serialization; keys are named exactly like the fields.
ControllerConfig load_config(std::istream& in);
ControllerConfig load_config_file(const std::filesystem::path& path);
void save_config(const ControllerConfig& cfg, std::ostream& out);

/// Digests of visited local optima, with optional evict-oldest cap.
class LocalOptimaMemory {
public:
    explicit LocalOptimaMemory(std::size_t cap = 0) : cap_(cap) {}

    bool contains(std::uint64_t digest) const { return set_.contains(digest); }
    std::size_t size() const { return set_.size(); }

    /// Returns true when the digest was new.
    bool record(std::uint64_t digest);

private:
    std::size_t cap_;
    std::unordered_set<std::uint64_t> set_;
    std::deque<std::uint64_t> order_;
};

struct PrelearnResult {
    std::vector<ParameterTriple> ranked;  // ascending revisit count, truncated
    std::uint64_t iterations = 0;         // perturb-descend-check rounds run
    std::vector<std::uint32_t> revisits;  // parallel to ranked
    LocalOptimaMemory memory;             // local optima seen while ranking
};

/// Ranks every action by how rarely it revisits known local optima: alpha
/// round-robin passes of perturb -> descend -> digest lookup over the whole
/// space, sorted ascending by revisit count (ties keep enumeration order)
/// and truncated to n_prune. on_new_best fires whenever descent improves on
/// ctx.best_size; the caller is expected to update ctx.best_size there.
/// Honors ctx deadline; a truncated run ranks by the counts collected so far.
PrelearnResult prelearn(SearchContext& ctx, const ControllerConfig& cfg,
                        const std::function<void(const KPlexState&)>& on_new_best);

/// Softmax action selection over a small learning list with windowed-mean
/// action values and periodic replacement of the weakest action by an
/// interpolation estimate over the prelearning ranking.
class Controller {
public:
    Controller(ControllerConfig cfg, std::vector<ParameterTriple> ranked,
               LocalOptimaMemory memory = LocalOptimaMemory{});

    int slots() const { return static_cast<int>(learn_pos_.size()); }
    const ParameterTriple& slot_triple(int slot) const;
    /// Positions of the learning list inside the ranked space, ascending.
    const std::vector<int>& learn_positions() const { return learn_pos_; }
    const std::vector<ParameterTriple>& space() const { return ranked_; }
    std::span<const double> action_values() const { return omega_; }
    std::span<const std::deque<double>> reward_windows() const { return windows_; }
    LocalOptimaMemory& memory() { return memory_; }

    /// Boltzmann probabilities exp(w_i / tau) / sum_j exp(w_j / tau).
    std::vector<double> selection_probabilities() const;

    std::pair<ParameterTriple, int> select(std::mt19937_64& rng) const;

    /// Zero for an already-visited optimum; otherwise
    /// delta1 * (slots - slot) + delta2 * quality(size, best_size), and the
    /// digest is recorded. best_size must be >= size and positive.
    double compute_reward(std::uint64_t digest, Vertex size, int slot, Vertex best_size);

    void apply_reward(int slot, double reward);

    /// Drops the slot with the lowest selection probability (ties: largest
    /// slot index), admits the outside action with the highest interpolated
    /// probability estimate, re-sorts by prelearning rank, and resets all
    /// action values and reward windows. No-op when no outside action exists.
    void update_learning_list(std::mt19937_64& rng);

    /// Piecewise-linear probability estimates over ranked positions
    /// 0..total-1 given the known (position, probability) support points:
    /// left of the first point P0/(pos0-x), right of the last Pn/(x-posn),
    /// linear in between. Known positions keep their own probability.
    static std::vector<double> estimate_probabilities(std::span<const int> known_pos,
                                                      std::span<const double> known_prob,
                                                      int total);

private:
    ControllerConfig cfg_;
    std::vector<ParameterTriple> ranked_;
    std::vector<int> learn_pos_;
    std::vector<double> omega_;
    std::vector<std::deque<double>> windows_;
    LocalOptimaMemory memory_;
};

}  // namespace kplex
