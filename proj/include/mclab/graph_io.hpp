#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mclab/graph.hpp"

namespace mclab {

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0-based, u < v, strictly increasing)
//
// Lines whose first non-blank character is '#' and blank lines are skipped.
// Any violation raises ParseError carrying the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace mclab
