#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mclab {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are kept in canonical form: u < v, strictly increasing in
// lexicographic order. Adjacency lists are built once at construction and are
// sorted ascending, so every query below is deterministic.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = std::size_t{1} << 20;
  static constexpr std::size_t kMaxEdges = std::size_t{1} << 28;

  // Single isolated vertex.
  Graph() : Graph(1, {}) {}

  // Throws DomainError unless `edges` is already canonical and within limits.
  Graph(std::size_t n, std::vector<Edge> edges);

  // Accepts edges in any order and orientation, then canonicalizes. Self
  // loops and repeated pairs are still rejected.
  static Graph from_unordered(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;

  // Position of edge {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// --- connectivity -----------------------------------------------------------

bool is_connected(const Graph& g);

// Component id per vertex; ids are numbered by smallest member vertex.
std::vector<std::size_t> component_labels(const Graph& g);

// Vertex partition, each part ascending, parts ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// --- degrees ----------------------------------------------------------------

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

// --- structure --------------------------------------------------------------

// Breadth-first tree from vertex 0, neighbors visited in ascending order.
// Returned in canonical edge order. Throws NotConnectedError.
std::vector<Edge> spanning_tree(const Graph& g);

// Longest shortest path; nullopt stands for "infinite" (disconnected).
std::optional<std::size_t> diameter(const Graph& g);

// Articulation point test. Throws NotConnectedError on disconnected input.
bool has_cut_vertex(const Graph& g);

bool is_triangle_free(const Graph& g);

// kappa(G). kappa(K_n) = n-1, 0 for disconnected graphs.
std::size_t vertex_connectivity(const Graph& g);

// Local vertex connectivity between two distinct non-adjacent vertices: the
// maximum number of internally vertex-disjoint s-t paths. Stops counting at
// `limit` when one is given.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t,
                                      std::size_t limit = SIZE_MAX);

// kappa(G) >= k, decided with flows capped at k.
bool is_k_connected(const Graph& g, std::size_t k);

Graph complement(const Graph& g);

inline constexpr std::size_t kDefaultChromaticCap = 16;

// Exact chromatic number by branch and bound. Throws TooLargeError when
// n exceeds `cap`.
std::size_t chromatic_number_small(const Graph& g,
                                   std::size_t cap = kDefaultChromaticCap);

// --- named graphs -----------------------------------------------------------

namespace named {

Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
// Center 0 joined to 1..n-1.
Graph star(std::size_t n);
Graph petersen();

}  // namespace named

}  // namespace mclab
