#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kplex/controller.hpp"
#include "kplex/graph.hpp"
#include "kplex/search.hpp"

namespace kplex {

/// Stop conditions; at least one of time_seconds/iterations should be set
/// for a bounded run. target stops a run early once the incumbent reaches
/// the given size (time-to-target protocol).
struct Budget {
    std::optional<double> time_seconds;
    std::optional<std::uint64_t> iterations;
    std::optional<Vertex> target;
};

struct SolverOptions {
    ControllerConfig controller;
    bool trace = false;             // record (iteration, triple, reward) per step
    MoveObserver* observer = nullptr;  // test instrumentation, fired on every move
};

struct TraceEntry {
    std::uint64_t iteration;
    ParameterTriple triple;
    double reward;
};

struct SolverResult {
    std::vector<Vertex> best_set;
    Vertex best_size = 0;
    double time_to_best_seconds = 0.0;
    std::uint64_t iteration_of_best = 0;  // 0 while still at the initial solution
    std::uint64_t iterations = 0;         // main-loop passes
    std::uint64_t prelearn_iterations = 0;
    std::uint64_t moves = 0;              // applied swaps, all phases
    std::vector<TraceEntry> trace;
};

/// Adaptive run: prelearning ranks the action space, then each iteration
/// selects a perturbation triple by softmax over windowed action values,
/// perturbs, descends, and rewards the action by novelty and quality.
/// Deterministic per (graph, k, seed, iteration budget, options).
SolverResult solve_rle(const Graph& g, int k, const Budget& budget,
                       std::uint64_t seed, const SolverOptions& opts = {});

/// Ablation run: the perturbation triple is drawn uniformly from the same
/// ranges every iteration; no prelearning, rewards, or learning list.
SolverResult solve_rnd(const Graph& g, int k, const Budget& budget,
                       std::uint64_t seed, const SolverOptions& opts = {});

}  // namespace kplex
