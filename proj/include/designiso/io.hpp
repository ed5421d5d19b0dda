#pragma once

#include "designiso/graph.hpp"

#include <stdexcept>
#include <string>

namespace designiso {

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& message, int line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

/// Design file grammar:
///   design <t> <v> <k> <lambda>
///   <b>
///   b lines of k space-separated 0-based point indices
/// '#' starts a comment; blank lines are ignored. Blocks are stored sorted
/// within each block and lexicographically across blocks.
Design parse_design(const std::string& text);
std::string emit_design(const Design& d);

/// DIMACS undirected graph format: optional "c" comment lines, one
/// "p edge <n> <m>" line, then m lines "e <u> <v>" with 1-based endpoints.
/// Duplicate edges are collapsed; a warning per duplicate is appended to
/// `warnings` when non-null.
Graph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);
std::string emit_graph(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace designiso
