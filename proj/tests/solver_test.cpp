#include <doctest.h>

#include "kplex/exact.hpp"
#include "kplex/gen.hpp"
#include "kplex/report.hpp"
#include "kplex/solver.hpp"
#include "test_support.hpp"

using namespace kplex;

namespace {

SolverOptions desk_options() {
    SolverOptions opts;
    opts.controller.alpha = 0;  // skip prelearning on toy instances
    return opts;
}

Budget iter_budget(std::uint64_t iters) {
    Budget b;
    b.iterations = iters;
    return b;
}

}  // namespace

TEST_CASE("whole clique is found immediately") {
    const Graph k5 = test::complete(5);
    for (const bool adaptive : {true, false}) {
        Budget b = iter_budget(50);
        b.target = 5;
        const SolverResult res = adaptive ? solve_rle(k5, 1, b, 3, desk_options())
                                          : solve_rnd(k5, 1, b, 3, desk_options());
        CHECK(res.best_size == 5);
        CHECK(test::sorted(res.best_set) == std::vector<Vertex>{0, 1, 2, 3, 4});
    }
}

TEST_CASE("degenerate graphs") {
    const SolverResult empty = solve_rle(test::edgeless(0), 2, iter_budget(5), 1, desk_options());
    CHECK(empty.best_size == 0);
    CHECK(empty.best_set.empty());

    const SolverResult single = solve_rle(test::edgeless(1), 2, iter_budget(5), 1, desk_options());
    CHECK(single.best_size == 1);
}

TEST_CASE("results are reproducible under an iteration budget") {
    const Graph g = gen::gnp(20, 0.4, 5);
    SolverOptions opts = desk_options();
    opts.trace = true;

    for (const bool adaptive : {true, false}) {
        auto run = [&] {
            return adaptive ? solve_rle(g, 2, iter_budget(300), 9, opts)
                            : solve_rnd(g, 2, iter_budget(300), 9, opts);
        };
        const SolverResult a = run();
        const SolverResult b = run();
        CHECK(a.best_set == b.best_set);
        CHECK(a.best_size == b.best_size);
        CHECK(a.iterations == b.iterations);
        CHECK(a.iteration_of_best == b.iteration_of_best);
        CHECK(a.moves == b.moves);
        REQUIRE(a.trace.size() == b.trace.size());
        for (std::size_t i = 0; i < a.trace.size(); ++i) {
            CHECK(a.trace[i].triple == b.trace[i].triple);
            CHECK(a.trace[i].reward == doctest::Approx(b.trace[i].reward));
        }
        const SolverResult c = adaptive ? solve_rle(g, 2, iter_budget(300), 10, opts)
                                        : solve_rnd(g, 2, iter_budget(300), 10, opts);
        CHECK((c.moves != a.moves || c.best_set != a.best_set || c.trace.size() != a.trace.size()));
    }
}

TEST_CASE("iteration budget is exact") {
    const Graph g = gen::gnp(15, 0.5, 6);
    const SolverResult res = solve_rle(g, 2, iter_budget(123), 4, desk_options());
    CHECK(res.iterations == 123);
}

TEST_CASE("adaptive run with prelearning stays consistent") {
    const Graph g = gen::gnp(16, 0.5, 21);
    SolverOptions opts;
    opts.controller.alpha = 1;
    const SolverResult res = solve_rle(g, 2, iter_budget(100), 2, opts);
    CHECK(res.prelearn_iterations == 4158);
    CHECK(res.iterations == 100);
    CHECK(res.best_size >= 1);
    CHECK(test::brute_feasible(g, res.best_set, 2));
}

TEST_CASE("single-action configuration degenerates to plain iterated local search") {
    const Graph g = gen::gnp(14, 0.5, 30);
    SolverOptions opts = desk_options();
    opts.controller.kappa = 1;
    opts.controller.n_prune = 1;
    const SolverResult res = solve_rle(g, 2, iter_budget(500), 8, opts);
    CHECK(res.best_size >= 2);
    CHECK(test::brute_feasible(g, res.best_set, 2));
}

TEST_CASE("returned best is feasible and matches the oracle on small instances") {
    std::mt19937_64 seq(44);
    int optimal = 0;
    const int cases = 30;
    for (int t = 0; t < cases; ++t) {
        const auto n = static_cast<Vertex>(10 + uniform_index(seq, 5));
        const Graph g = gen::gnp(n, 0.5, seq());
        const int k = 1 + static_cast<int>(uniform_index(seq, 3));
        const Vertex opt = exact_max_kplex(g, k);
        Budget b = iter_budget(3000);
        b.target = opt;
        const SolverResult res = solve_rle(g, k, b, seq(), desk_options());
        CHECK(test::brute_feasible(g, res.best_set, k));
        CHECK(res.best_size <= opt);
        optimal += res.best_size == opt ? 1 : 0;
    }
    CHECK(optimal == cases);
}

TEST_CASE("observer sees every applied move and feasibility never breaks") {
    struct Watch : MoveObserver {
        std::uint64_t moves = 0;
        bool all_feasible = true;
        void on_move(const KPlexState& s) override {
            ++moves;
            all_feasible = all_feasible && s.feasible();
        }
    } watch;
    SolverOptions opts = desk_options();
    opts.observer = &watch;
    const Graph g = gen::gnp(14, 0.5, 50);
    const SolverResult res = solve_rle(g, 2, iter_budget(200), 5, opts);
    CHECK(watch.all_feasible);
    CHECK(watch.moves > 0);
    CHECK(watch.moves <= res.moves);  // greedy construction also advances the counter
}

TEST_CASE("random-triple variant solves hamming6-2 at k=2") {
    const auto g = gen::by_name("hamming6-2");
    Budget b;
    b.time_seconds = 60.0;
    b.target = 32;
    const SolverResult res = solve_rnd(*g, 2, b, 17, desk_options());
    CHECK(res.best_size == 32);
    CHECK(test::brute_feasible(*g, res.best_set, 2));
}

TEST_CASE("time-to-target stops early") {
    const Graph g = test::complete(30);
    Budget b;
    b.time_seconds = 60.0;
    b.target = 30;
    const auto t0 = std::chrono::steady_clock::now();
    const SolverResult res = solve_rle(g, 2, b, 7, desk_options());
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(res.best_size == 30);
    CHECK(elapsed < 10.0);
}
