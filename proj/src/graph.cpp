#include "mclab/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw DomainError("graph must have at least one vertex");
  if (n_ > kMaxVertices) {
    throw DomainError("vertex count " + std::to_string(n_) +
                      " exceeds limit " + std::to_string(kMaxVertices));
  }
  if (edges_.size() > kMaxEdges) {
    throw DomainError("edge count " + std::to_string(edges_.size()) +
                      " exceeds limit " + std::to_string(kMaxEdges));
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= e.v) {
      throw DomainError("edge " + edge_text(e) + " is not of the form u < v");
    }
    if (e.v >= n_) {
      throw DomainError("edge " + edge_text(e) + " has endpoint outside [0, " +
                        std::to_string(n_) + ")");
    }
    if (i > 0 && !(edges_[i - 1] < e)) {
      throw DomainError("edge " + edge_text(e) +
                        " breaks strictly increasing edge order");
    }
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Canonical edge order yields ascending lists: for vertex w the neighbors
  // below w arrive (as e.u, ordered by u) before those above (as e.v).
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
}

Graph Graph::from_unordered(std::size_t n, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw DomainError("repeated edge " + edge_text(*dup));
  }
  return Graph(n, std::move(edges));
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " outside [0, " +
                      std::to_string(n_) + ")");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return std::span<const Vertex>(adjacency_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  auto nb = neighbors(a);
  check_vertex(b);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
  if (it == edges_.end() || *it != Edge{a, b}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

// --- connectivity -----------------------------------------------------------

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// BFS distances from `source`; kUnvisited for unreachable vertices.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.n(), kUnvisited);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnvisited) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::size_t> component_labels(const Graph& g) {
  std::vector<std::size_t> label(g.n(), kUnvisited);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (label[root] != kUnvisited) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnvisited) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto label = component_labels(g);
  const std::size_t count =
      label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> parts(count);
  for (Vertex v = 0; v < g.n(); ++v) parts[label[v]].push_back(v);
  return parts;
}

bool is_connected(const Graph& g) {
  if (g.m() + 1 < g.n()) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kUnvisited; });
}

// --- degrees ----------------------------------------------------------------

std::size_t min_degree(const Graph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// --- structure --------------------------------------------------------------

std::vector<Edge> spanning_tree(const Graph& g) {
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> queue;
  std::vector<Edge> tree;
  queue.reserve(g.n());
  tree.reserve(g.n() - 1);
  seen[0] = true;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      queue.push_back(w);
      tree.push_back(Edge{std::min(v, w), std::max(v, w)});
    }
  }
  if (queue.size() != g.n()) throw NotConnectedError("spanning tree");
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == kUnvisited) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool has_cut_vertex(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> parent(n, kUnvisited);
  std::vector<std::size_t> next_child(n, 0);
  std::size_t time = 0;
  std::size_t root_children = 0;

  // Iterative DFS from vertex 0; n can reach 2^20.
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = time++;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nb = g.neighbors(v);
    if (next_child[v] < nb.size()) {
      const Vertex w = nb[next_child[v]++];
      if (disc[w] == kUnvisited) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (parent[v] == kUnvisited) continue;
    const Vertex p = static_cast<Vertex>(parent[v]);
    low[p] = std::min(low[p], low[v]);
    if (p != 0 && low[v] >= disc[p]) return true;
  }
  if (time != n) throw NotConnectedError("cut vertex query");
  return root_children > 1;
}

bool is_triangle_free(const Graph& g) {
  // Every triangle {a<b<c} contains edge (a,b) with c a common neighbor > b.
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    auto ia = std::upper_bound(a.begin(), a.end(), e.v);
    auto ib = std::upper_bound(b.begin(), b.end(), e.v);
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) return false;
      if (*ia < *ib) {
        ++ia;
      } else {
        ++ib;
      }
    }
  }
  return true;
}

namespace {

// Unit-capacity residual network on the split graph: vertex v becomes
// in = 2v and out = 2v+1 joined by an arc of capacity 1.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Graph& g) : head_(2 * g.n(), kNone) {
    for (Vertex v = 0; v < g.n(); ++v) add_arc(2 * v, 2 * v + 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
  }

  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    const std::size_t source = 2 * s + 1;
    const std::size_t sink = 2 * t;
    std::vector<std::size_t> via(head_.size());
    std::vector<std::size_t> queue;
    std::size_t flow = 0;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), kNone);
      queue.assign(1, source);
      via[source] = kNone - 1;
      for (std::size_t qi = 0; qi < queue.size() && via[sink] == kNone; ++qi) {
        const std::size_t x = queue[qi];
        for (std::size_t a = head_[x]; a != kNone; a = arcs_[a].next) {
          const std::size_t y = arcs_[a].to;
          if (arcs_[a].cap > 0 && via[y] == kNone) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == kNone) break;
      for (std::size_t y = sink; y != source;) {
        const std::size_t a = via[y];
        --arcs_[a].cap;
        ++arcs_[a ^ 1].cap;
        y = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Arc {
    std::size_t to;
    std::size_t next;
    int cap;
  };

  // Arc 2k is forward, 2k+1 its residual twin.
  void add_arc(std::size_t from, std::size_t to) {
    arcs_.push_back(Arc{to, head_[from], 1});
    head_[from] = arcs_.size() - 1;
    arcs_.push_back(Arc{from, head_[to], 0});
    head_[to] = arcs_.size() - 1;
  }

  std::vector<std::size_t> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t,
                                      std::size_t limit) {
  if (s == t || g.adjacent(s, t)) {
    throw DomainError("local vertex connectivity needs distinct non-adjacent "
                      "vertices");
  }
  SplitFlowNetwork net(g);
  return net.max_flow(s, t, limit);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.n();
  if (!is_connected(g)) return 0;
  if (g.m() == n * (n - 1) / 2) return n - 1;
  // Even's scheme: some vertex among the first kappa+1 lies outside a
  // minimum separator and is cut from a later vertex.
  std::size_t best = n - 1;
  for (Vertex i = 0; i < n && i <= best; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, local_vertex_connectivity(g, i, j, best));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  if (k == 0) return true;
  if (n <= k || !is_connected(g)) return false;
  if (g.m() == n * (n - 1) / 2) return true;
  if (min_degree(g) < k) return false;
  for (Vertex i = 0; i < n && i <= k; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      if (local_vertex_connectivity(g, i, j, k) < k) return false;
    }
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const std::size_t n = g.n();
  edges.reserve(n * (n - 1) / 2 - g.m());
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      edges.push_back(Edge{u, v});
    }
  }
  return Graph(n, std::move(edges));
}

// --- chromatic number -------------------------------------------------------

namespace {

using Mask = std::uint64_t;

void grow_clique(const std::vector<Mask>& adj, Mask candidates,
                 std::size_t size, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) {
      return;
    }
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(adj, candidates & adj[v], size + 1, best);
  }
}

bool extend_coloring(const std::vector<Mask>& adj,
                     const std::vector<int>& order, std::size_t index,
                     std::vector<Mask>& classes, std::size_t used,
                     std::size_t k) {
  if (index == order.size()) return true;
  const int v = order[index];
  // Colors beyond the first unused one are symmetric.
  const std::size_t limit = std::min(k, used + 1);
  for (std::size_t c = 0; c < limit; ++c) {
    if ((classes[c] & adj[v]) != 0) continue;
    classes[c] |= Mask{1} << v;
    const bool ok = extend_coloring(adj, order, index + 1, classes,
                                    std::max(used, c + 1), k);
    classes[c] &= ~(Mask{1} << v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::size_t chromatic_number_small(const Graph& g, std::size_t cap) {
  const std::size_t n = g.n();
  if (n > cap || n > 64) {
    throw TooLargeError("graph with " + std::to_string(n) +
                        " vertices is too large for exact chromatic number "
                        "(cap " + std::to_string(std::min<std::size_t>(cap, 64)) +
                        ")");
  }
  if (g.m() == 0) return 1;

  std::vector<Mask> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }

  std::size_t lower = 0;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  grow_clique(adj, all, 0, lower);

  std::vector<int> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<int>(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });

  // Greedy first-fit in the same order gives the initial upper bound.
  std::vector<Mask> classes;
  for (int v : order) {
    auto fit = std::find_if(classes.begin(), classes.end(),
                            [&](Mask c) { return (c & adj[v]) == 0; });
    if (fit == classes.end()) {
      classes.push_back(Mask{1} << v);
    } else {
      *fit |= Mask{1} << v;
    }
  }
  const std::size_t upper = classes.size();

  for (std::size_t k = lower; k < upper; ++k) {
    std::vector<Mask> trial(k, 0);
    if (extend_coloring(adj, order, 0, trial, 0, k)) return k;
  }
  return upper;
}

// --- named graphs -----------------------------------------------------------

namespace named {

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph empty(std::size_t n) { return Graph(n, {}); }

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_unordered(n, std::move(edges));
}

Graph star(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});       // outer 5-cycle
    edges.push_back({i, i + 5});             // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return Graph::from_unordered(10, std::move(edges));
}

}  // namespace named

}  // namespace mclab
