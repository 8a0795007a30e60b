#include "kplex/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kplex {

namespace {

bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    std::uint64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out = v;
    return true;
}

}  // namespace

Graph parse_dimacs(std::istream& in, ParseDiagnostics* diag) {
    std::string line;
    std::size_t lineno = 0;
    bool have_problem = false;
    std::uint64_t n = 0;
    std::uint64_t declared_m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) continue;  // blank line

        if (head == "c") continue;

        if (head == "p") {
            if (have_problem) throw ParseError(lineno, "duplicate problem line");
            std::string fmt, ntok, mtok, extra;
            if (!(ss >> fmt >> ntok >> mtok)) {
                throw ParseError(lineno, "malformed problem line");
            }
            if (ss >> extra) throw ParseError(lineno, "trailing tokens on problem line");
            if (fmt != "edge" && fmt != "col") {
                throw ParseError(lineno, "unsupported format '" + fmt + "'");
            }
            if (!parse_u64(ntok, n) || !parse_u64(mtok, declared_m)) {
                throw ParseError(lineno, "problem line counts must be non-negative integers");
            }
            if (n > Graph::kBitsetLimit * 1024ULL) {
                throw ParseError(lineno, "vertex count too large");
            }
            have_problem = true;
            edges.reserve(declared_m);
            continue;
        }

        if (head == "e") {
            if (!have_problem) throw ParseError(lineno, "edge line before problem line");
            std::string utok, vtok, extra;
            if (!(ss >> utok >> vtok)) throw ParseError(lineno, "malformed edge line");
            if (ss >> extra) throw ParseError(lineno, "trailing tokens on edge line");
            std::uint64_t u = 0, v = 0;
            if (!parse_u64(utok, u) || !parse_u64(vtok, v)) {
                throw ParseError(lineno, "edge endpoints must be positive integers");
            }
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(lineno, "vertex index outside 1.." + std::to_string(n));
            }
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }

        throw ParseError(lineno, "unrecognized line type '" + head + "'");
    }

    if (!have_problem) throw ParseError(lineno, "missing problem line");

    Graph g(static_cast<Vertex>(n), edges);
    if (diag) {
        diag->declared_edges = declared_m;
        diag->parsed_edges = g.num_edges();
        if (g.num_edges() != declared_m) {
            diag->warnings.push_back(
                "problem line declares " + std::to_string(declared_m) +
                " edges but " + std::to_string(g.num_edges()) + " distinct edges parsed");
        }
    }
    return g;
}

Graph parse_dimacs_file(const std::filesystem::path& path, ParseDiagnostics* diag) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path.string());
    }
    return parse_dimacs(in, diag);
}

void write_dimacs(const Graph& g, std::ostream& out, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const auto& [u, v] : g.edges()) {
        out << "e " << (u + 1) << " " << (v + 1) << "\n";
    }
}

}  // namespace kplex
