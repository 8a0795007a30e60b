// Writes benchmark-family graphs in DIMACS format. The deterministic
// families (hamming, johnson, keller4, MANN_a9, c-fat) reproduce the classic
// instances of the same names up to vertex relabeling.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kplex/dimacs.hpp"
#include "kplex/gen.hpp"

namespace {

int write_out(const kplex::Graph& g, const std::string& path, const std::string& comment) {
    if (path.empty() || path == "-") {
        kplex::write_dimacs(g, std::cout, comment);
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    kplex::write_dimacs(g, out, comment);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DIMACS benchmark graph generator"};
    app.require_subcommand(1);
    app.fallthrough();  // let -o appear after the subcommand
    std::string out_path;
    app.add_option("-o,--output", out_path, "output file (default: stdout)");

    int h_bits = 6, h_dist = 2;
    auto* hamming = app.add_subcommand("hamming", "Hamming distance graph on bit strings");
    hamming->add_option("--bits", h_bits, "word length")->required();
    hamming->add_option("--min-dist", h_dist, "minimum Hamming distance")->required();

    int j_bits = 8, j_weight = 2, j_dist = 4;
    auto* johnson = app.add_subcommand("johnson", "Johnson graph on fixed-weight words");
    johnson->add_option("--bits", j_bits)->required();
    johnson->add_option("--weight", j_weight)->required();
    johnson->add_option("--min-dist", j_dist)->required();

    auto* keller = app.add_subcommand("keller4", "reduced dimension-4 Keller graph (171 vertices)");

    auto* mann = app.add_subcommand("mann-a9", "Steiner-triple covering clique graph (45 vertices)");

    std::uint32_t f_n = 200;
    int f_c = 1;
    auto* cfat = app.add_subcommand("cfat", "ring-of-cliques fault diagnosis graph");
    cfat->add_option("--n", f_n)->required();
    cfat->add_option("--c", f_c)->required();

    std::uint32_t g_n = 100;
    double g_p = 0.5;
    std::uint64_t g_seed = 1;
    auto* gnp = app.add_subcommand("gnp", "Erdos-Renyi G(n, p)");
    gnp->add_option("--n", g_n)->required();
    gnp->add_option("--p", g_p)->required();
    gnp->add_option("--seed", g_seed);

    std::string name;
    auto* by = app.add_subcommand("name", "generate by conventional instance name");
    by->add_option("name", name, "e.g. hamming6-2, johnson8-4-4, keller4, MANN_a9, c-fat200-1")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hamming) {
            return write_out(kplex::gen::hamming(h_bits, h_dist), out_path,
                             "hamming" + std::to_string(h_bits) + "-" + std::to_string(h_dist));
        }
        if (*johnson) {
            return write_out(kplex::gen::johnson(j_bits, j_weight, j_dist), out_path,
                             "johnson" + std::to_string(j_bits) + "-" + std::to_string(j_weight) +
                                 "-" + std::to_string(j_dist));
        }
        if (*keller) return write_out(kplex::gen::keller4(), out_path, "keller4");
        if (*mann) return write_out(kplex::gen::mann_a9(), out_path, "MANN_a9");
        if (*cfat) {
            return write_out(kplex::gen::c_fat(f_n, f_c), out_path,
                             "c-fat" + std::to_string(f_n) + "-" + std::to_string(f_c));
        }
        if (*gnp) {
            return write_out(kplex::gen::gnp(g_n, g_p, g_seed), out_path,
                             "gnp n=" + std::to_string(g_n) + " seed=" + std::to_string(g_seed));
        }
        if (*by) {
            auto g = kplex::gen::by_name(name);
            if (!g) {
                std::cerr << "error: no generator for instance '" << name << "'\n";
                return 1;
            }
            return write_out(*g, out_path, name);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
