#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

/// Parse failure in a DIMACS stream; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParseDiagnostics {
    std::size_t declared_edges = 0;  // m from the problem line (advisory)
    std::size_t parsed_edges = 0;    // distinct undirected edges kept
    std::vector<std::string> warnings;
};

/// Reads the ASCII DIMACS clique format:
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>        (1-based endpoints)
/// Duplicate edge lines and both orientations collapse to one edge.
/// The declared m is advisory; a mismatch is reported as a warning only.
/// Self-loops, indices outside 1..n, malformed tokens, and a missing or
/// repeated problem line raise ParseError with the offending line number.
Graph parse_dimacs(std::istream& in, ParseDiagnostics* diag = nullptr);

Graph parse_dimacs_file(const std::filesystem::path& path,
                        ParseDiagnostics* diag = nullptr);

/// Writes the graph back in DIMACS form (1-based, canonical edge order).
void write_dimacs(const Graph& g, std::ostream& out,
                  const std::string& comment = {});

}  // namespace kplex
