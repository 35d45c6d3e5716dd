#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

using Color = std::uint32_t;

// Total edge coloring aligned with a graph's canonical edge order.
//
// Labels are always canonical: 0..k-1, and label j first appears before
// label j+1. Any labeling passed in is relabeled by first occurrence; the
// partition of edges into color classes is what matters.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  static EdgeColoring from_labels(std::span<const std::uint64_t> labels);
  static EdgeColoring from_labels(std::span<const Color> labels);

  std::size_t num_colors() const noexcept { return num_colors_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const Color> labels() const noexcept { return labels_; }
  Color operator[](std::size_t edge) const { return labels_.at(edge); }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> labels_;
  std::size_t num_colors_ = 0;
};

// Spanning-tree edges share color 0; each remaining edge gets its own color.
// Uses m-n+2 colors. Throws NotConnectedError.
EdgeColoring spanning_tree_coloring(const Graph& g);

// First vertex pair (lexicographic) joined by no monochromatic path.
// Throws DomainError when the coloring does not match g's edge count.
std::optional<std::pair<Vertex, Vertex>> find_uncovered_pair(
    const Graph& g, const EdgeColoring& c);

// True iff every pair of vertices is joined by a monochromatic path.
bool verify_mc_coloring(const Graph& g, const EdgeColoring& c);

// Coloring text format: "k", then one label per edge in canonical order.
// Labels must lie in [0,k) and all k must be used. ParseError otherwise.
EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const EdgeColoring& c);

}  // namespace mclab
