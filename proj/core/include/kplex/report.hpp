#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/solver.hpp"

namespace kplex {

struct RunRow {
    std::uint64_t seed = 0;
    Vertex size = 0;
    double seconds = 0.0;               // time to best within the run
    std::uint64_t iterations = 0;       // main-loop passes executed
    std::uint64_t iteration_of_best = 0;
    std::vector<Vertex> best_set;       // kept in memory, not serialized
};

/// Aggregated outcome of one (instance, k, algorithm) cell.
/// avg_time_to_best averages only the runs that reached `max`.
/// Wall-clock fields are emitted only for time-budget experiments; under an
/// iteration budget they are blanked so reports are byte-reproducible.
struct RunReport {
    std::string instance;
    int k = 0;
    std::string algo;  // "rle" | "rnd"
    std::uint32_t runs = 0;
    bool time_budget = true;
    bool failed = false;
    std::string error;

    Vertex max = 0;
    double avg = 0.0;
    double avg_time_to_best = 0.0;
    std::vector<RunRow> rows;

    void aggregate();  // recomputes max/avg/avg_time_to_best from rows
};

struct ExperimentSpec {
    std::vector<std::filesystem::path> instances;
    std::vector<int> ks;
    std::uint32_t runs = 20;
    Budget budget;                          // 180 s cutoff unless overridden
    std::string algo = "rle";
    std::uint64_t seed0 = 1;                // run r uses seed0 + r
    SolverOptions options;
    unsigned jobs = 1;
    std::optional<std::filesystem::path> save_solutions_dir;
};

/// Runs runs x instances x ks independent solves (parallel across runs when
/// jobs > 1) and aggregates one report per (instance, k). An unreadable
/// instance yields a failed report per k and the experiment continues.
std::vector<RunReport> run_experiment(const ExperimentSpec& spec);

/// In-memory single-cell variant used by tests and drivers that already
/// hold a Graph.
RunReport run_instance(const Graph& g, const std::string& name, int k,
                       std::uint32_t runs, const Budget& budget,
                       const std::string& algo, std::uint64_t seed0,
                       const SolverOptions& options, unsigned jobs = 1);

enum class ReportFormat { kCsv, kJson, kTable };

std::string emit_report(std::span<const RunReport> reports, ReportFormat format);

/// Inverse of emit_report(kJson) for everything json carries.
std::vector<RunReport> parse_report_json(const std::string& text);

/// One solution file per run: 1-based vertex list, one per line.
void save_solutions(const RunReport& report, const std::filesystem::path& dir);

}  // namespace kplex
