#pragma once

// Brute-force reference computations for small graphs. Everything here works
// from an adjacency matrix and plain enumeration, sharing no code path with
// the library algorithms it checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "mclab/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const mclab::Graph& g) {
  Matrix a(g.n(), std::vector<bool>(g.n(), false));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Connectivity of the subgraph induced by vertices with keep[v] == true.
inline bool connected_induced(const Matrix& a, const std::vector<bool>& keep) {
  const std::size_t n = a.size();
  std::size_t start = n;
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (keep[v]) {
      ++count;
      if (start == n) start = v;
    }
  }
  if (count <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (keep[w] && a[v][w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == count;
}

inline bool connected(const Matrix& a) {
  return connected_induced(a, std::vector<bool>(a.size(), true));
}

// Floyd-Warshall; -1 for infinite.
inline long diameter(const Matrix& a) {
  const std::size_t n = a.size();
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  long best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return -1;
      best = std::max(best, d[i][j]);
    }
  return best;
}

inline bool has_cut_vertex(const Matrix& a) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    std::vector<bool> keep(a.size(), true);
    keep[v] = false;
    if (!connected_induced(a, keep)) return true;
  }
  return false;
}

inline bool triangle_free(const Matrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (a[i][j] && a[j][k] && a[i][k]) return false;
  return true;
}

// Smallest vertex subset whose removal disconnects the graph or leaves one
// vertex; n-1 for complete graphs, 0 when already disconnected.
inline std::size_t vertex_connectivity(const Matrix& a) {
  const std::size_t n = a.size();
  if (!connected(a)) return 0;
  std::size_t best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best || size + 2 > n) continue;
    std::vector<bool> keep(n);
    for (std::size_t v = 0; v < n; ++v) keep[v] = !(mask >> v & 1);
    if (!connected_induced(a, keep)) best = size;
  }
  return best;
}

// Smallest k admitting a proper coloring, by trying all k^n assignments.
inline std::size_t chromatic_number(const Matrix& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> col(n, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          if (a[i][j] && col[i] == col[j]) ok = false;
      if (ok) return k;
      std::size_t pos = 0;
      while (pos < n && ++col[pos] == k) col[pos++] = 0;
      if (pos == n) break;
    }
  }
  return n;
}

// Is there a u-v path using only edges of color c? Plain DFS per query.
inline bool mono_path(const mclab::Graph& g, const std::vector<std::size_t>& col,
                      std::size_t c, std::size_t u, std::size_t v) {
  std::vector<bool> seen(g.n(), false);
  std::vector<std::size_t> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (std::size_t i = 0; i < g.m(); ++i) {
      if (col[i] != c) continue;
      const auto& e = g.edges()[i];
      std::size_t y = g.n();
      if (e.u == x) y = e.v;
      if (e.v == x) y = e.u;
      if (y < g.n() && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

inline bool is_mc_coloring(const mclab::Graph& g,
                           const std::vector<std::size_t>& col) {
  std::size_t k = 0;
  for (auto c : col) k = std::max(k, c + 1);
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      bool found = false;
      for (std::size_t c = 0; c < k && !found; ++c) found = mono_path(g, col, c, u, v);
      if (!found) return false;
    }
  return true;
}

// mc(G) over every map from edges to {0..m-1} (m^m assignments), counting
// distinct colors used. Keep m <= 7.
inline std::size_t mc_by_all_labelings(const mclab::Graph& g) {
  const std::size_t m = g.m();
  if (!connected(matrix_of(g)) || g.n() == 1) return 0;
  std::vector<std::size_t> col(m, 0);
  std::size_t best = 0;
  for (;;) {
    std::vector<bool> used(m, false);
    std::size_t distinct = 0;
    for (auto c : col)
      if (!used[c]) {
        used[c] = true;
        ++distinct;
      }
    if (distinct > best && is_mc_coloring(g, col)) best = distinct;
    std::size_t pos = 0;
    while (pos < m && ++col[pos] == m) col[pos++] = 0;
    if (pos == m) break;
  }
  return best;
}

// Every labeled graph on n vertices (2^C(n,2) of them).
inline void for_each_labeled_graph(std::size_t n,
                                   const std::function<void(const mclab::Graph&)>& fn) {
  std::vector<mclab::Edge> all;
  for (mclab::Vertex u = 0; u < n; ++u)
    for (mclab::Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<mclab::Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    fn(mclab::Graph(n, std::move(edges)));
  }
}

}  // namespace oracle
