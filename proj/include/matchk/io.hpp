#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "matchk/graph.hpp"
#include "matchk/matrix.hpp"

namespace matchk {

// Text formats, '#' starts a comment line:
//   rectangular matrix:  "m n" then m rows of n entries
//   symmetric matrix:    "m"   then m rows of m entries (symmetric, zero diag)
//   graph:               "v <count>" then "e u v w" lines
// Entries are decimal integers or "p/q" rationals.

enum class InputKind { Bipartite, Symmetric, Graph };

struct ParsedInput {
    InputKind kind;
    std::optional<NonnegMatrix> matrix;
    std::optional<SymZeroDiagMatrix> symmetric;
    std::optional<WeightedGraph> graph;
};

ParsedInput parse_input(std::istream& in);
ParsedInput read_input(const std::string& path);

void write_matrix(std::ostream& out, const NonnegMatrix& b);
void write_symmetric(std::ostream& out, const SymZeroDiagMatrix& a);

}  // namespace matchk
