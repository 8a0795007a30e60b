#include "kplex/report.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "kplex/dimacs.hpp"

namespace kplex {

void RunReport::aggregate() {
    runs = static_cast<std::uint32_t>(rows.size());
    max = 0;
    avg = 0.0;
    avg_time_to_best = 0.0;
    if (rows.empty()) return;
    double sum = 0.0;
    for (const auto& r : rows) {
        max = std::max(max, r.size);
        sum += r.size;
    }
    avg = sum / static_cast<double>(rows.size());
    double tsum = 0.0;
    std::uint32_t hits = 0;
    for (const auto& r : rows) {
        if (r.size == max) {
            tsum += r.seconds;
            ++hits;
        }
    }
    avg_time_to_best = hits > 0 ? tsum / hits : 0.0;
}

RunReport run_instance(const Graph& g, const std::string& name, int k,
                       std::uint32_t runs, const Budget& budget,
                       const std::string& algo, std::uint64_t seed0,
                       const SolverOptions& options, unsigned jobs) {
    RunReport rep;
    rep.instance = name;
    rep.k = k;
    rep.algo = algo;
    rep.time_budget = !budget.iterations.has_value();
    rep.rows.resize(runs);

    auto one_run = [&](std::uint32_t r) {
        const std::uint64_t seed = seed0 + r;
        const SolverResult res = algo == "rnd" ? solve_rnd(g, k, budget, seed, options)
                                               : solve_rle(g, k, budget, seed, options);
        RunRow row;
        row.seed = seed;
        row.size = res.best_size;
        row.seconds = res.time_to_best_seconds;
        row.iterations = res.iterations;
        row.iteration_of_best = res.iteration_of_best;
        row.best_set = res.best_set;
        rep.rows[r] = std::move(row);
    };

    // a shared move observer is not synchronized; run serially then
    if (options.observer) jobs = 1;

    if (jobs <= 1 || runs <= 1) {
        for (std::uint32_t r = 0; r < runs; ++r) one_run(r);
    } else {
        std::atomic<std::uint32_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::uint32_t r = next.fetch_add(1);
                if (r >= runs) return;
                one_run(r);
            }
        };
        std::vector<std::thread> pool;
        const unsigned width = std::min<unsigned>(jobs, runs);
        pool.reserve(width);
        for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    rep.aggregate();
    return rep;
}

std::vector<RunReport> run_experiment(const ExperimentSpec& spec) {
    std::vector<RunReport> out;
    for (const auto& path : spec.instances) {
        Graph g;
        bool loaded = true;
        std::string error;
        try {
            g = parse_dimacs_file(path);
        } catch (const std::exception& e) {
            loaded = false;
            error = e.what();
        }
        const std::string name = path.stem().string();
        for (int k : spec.ks) {
            if (!loaded) {
                RunReport rep;
                rep.instance = name;
                rep.k = k;
                rep.algo = spec.algo;
                rep.failed = true;
                rep.error = error;
                rep.time_budget = !spec.budget.iterations.has_value();
                out.push_back(std::move(rep));
                continue;
            }
            RunReport rep = run_instance(g, name, k, spec.runs, spec.budget, spec.algo,
                                         spec.seed0, spec.options, spec.jobs);
            if (spec.save_solutions_dir) save_solutions(rep, *spec.save_solutions_dir);
            out.push_back(std::move(rep));
        }
    }
    return out;
}

namespace {

std::string fixed2(double x) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(2) << x;
    return ss.str();
}

}  // namespace

std::string emit_report(std::span<const RunReport> reports, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::kCsv: {
            out << "instance,k,algo,runs,max,avg,avg_time_s\n";
            for (const auto& r : reports) {
                out << r.instance << "," << r.k << "," << r.algo << "," << r.runs << ",";
                if (r.failed) {
                    out << ",,\n";
                    continue;
                }
                out << r.max << "," << fixed2(r.avg) << ",";
                if (r.time_budget) out << fixed2(r.avg_time_to_best);
                out << "\n";
            }
            break;
        }
        case ReportFormat::kJson: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) {
                nlohmann::ordered_json j;
                j["instance"] = r.instance;
                j["k"] = r.k;
                j["algo"] = r.algo;
                j["runs"] = r.runs;
                j["budget"] = r.time_budget ? "time" : "iterations";
                j["failed"] = r.failed;
                if (r.failed) {
                    j["error"] = r.error;
                } else {
                    j["max"] = r.max;
                    j["avg"] = r.avg;
                    if (r.time_budget) j["avg_time_s"] = r.avg_time_to_best;
                    auto rows = nlohmann::ordered_json::array();
                    for (const auto& row : r.rows) {
                        nlohmann::ordered_json rj;
                        rj["seed"] = row.seed;
                        rj["size"] = row.size;
                        if (r.time_budget) rj["time_s"] = row.seconds;
                        rj["iterations"] = row.iterations;
                        rj["iteration_of_best"] = row.iteration_of_best;
                        rows.push_back(std::move(rj));
                    }
                    j["rows"] = std::move(rows);
                }
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << "\n";
            break;
        }
        case ReportFormat::kTable: {
            std::size_t name_w = 8;
            for (const auto& r : reports) name_w = std::max(name_w, r.instance.size());
            out << std::left << std::setw(static_cast<int>(name_w) + 2) << "Instance"
                << std::setw(4) << "k" << std::setw(6) << "algo" << std::setw(6) << "runs"
                << std::setw(16) << "Max (Avg.)" << "Time(s)\n";
            for (const auto& r : reports) {
                out << std::left << std::setw(static_cast<int>(name_w) + 2) << r.instance
                    << std::setw(4) << r.k << std::setw(6) << r.algo << std::setw(6)
                    << r.runs;
                if (r.failed) {
                    out << "failed: " << r.error << "\n";
                    continue;
                }
                std::string cell = std::to_string(r.max);
                if (r.avg != static_cast<double>(r.max)) {
                    cell += " (" + fixed2(r.avg) + ")";
                }
                out << std::setw(16) << cell;
                out << (r.time_budget ? fixed2(r.avg_time_to_best) : std::string("-"));
                out << "\n";
            }
            break;
        }
    }
    return out.str();
}

std::vector<RunReport> parse_report_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<RunReport> out;
    for (const auto& j : arr) {
        RunReport r;
        r.instance = j.at("instance").get<std::string>();
        r.k = j.at("k").get<int>();
        r.algo = j.at("algo").get<std::string>();
        r.runs = j.at("runs").get<std::uint32_t>();
        r.time_budget = j.at("budget").get<std::string>() == "time";
        r.failed = j.at("failed").get<bool>();
        if (r.failed) {
            r.error = j.value("error", "");
            out.push_back(std::move(r));
            continue;
        }
        r.max = j.at("max").get<Vertex>();
        r.avg = j.at("avg").get<double>();
        if (r.time_budget) r.avg_time_to_best = j.at("avg_time_s").get<double>();
        for (const auto& rj : j.at("rows")) {
            RunRow row;
            row.seed = rj.at("seed").get<std::uint64_t>();
            row.size = rj.at("size").get<Vertex>();
            if (r.time_budget) row.seconds = rj.at("time_s").get<double>();
            row.iterations = rj.at("iterations").get<std::uint64_t>();
            row.iteration_of_best = rj.at("iteration_of_best").get<std::uint64_t>();
            r.rows.push_back(std::move(row));
        }
        out.push_back(std::move(r));
    }
    return out;
}

void save_solutions(const RunReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& row : report.rows) {
        const auto file = dir / (report.instance + "_k" + std::to_string(report.k) + "_" +
                                 report.algo + "_seed" + std::to_string(row.seed) + ".sol");
        std::ofstream out(file);
        if (!out) throw std::runtime_error("cannot write " + file.string());
        for (Vertex v : row.best_set) out << (v + 1) << "\n";
    }
}

}  // namespace kplex
