#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "k2free/graph.hpp"

namespace k2free {

/// Edge-list document:
///
///     # comment
///     n m
///     u v        (m lines, 0 <= u,v < n, u != v)
///
/// Lines starting with '#' and blank lines are skipped. Throws ParseError
/// naming the offending 1-based line.
Graph parse_edge_list(std::string_view text);

/// DIMACS-style: "c ..." comments, "p edge n m", then "e u v" with 1-based
/// ids. Converted to 0-based.
Graph parse_dimacs(std::string_view text);

/// Canonical edge list: header then edges sorted lexicographically with
/// u < v, each line newline-terminated.
std::string serialize_edge_list(const Graph& g);

/// FNV-1a 64 over the canonical edge list, as 16 lowercase hex digits.
std::string graph_signature(const Graph& g);

}  // namespace k2free
