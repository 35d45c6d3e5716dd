#include "mclab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

void check_args(std::size_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability must lie in [0, 1], got " +
                      std::to_string(p));
  }
  if (n == 0) throw DomainError("G(n,p) needs n >= 1");
  if (n > Graph::kMaxVertices) {
    throw DomainError("n = " + std::to_string(n) + " exceeds vertex limit");
  }
}

}  // namespace

Graph sample_gnp_dense(std::size_t n, double p, RngSeed seed) {
  check_args(n, p);
  Xoshiro256 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph sample_gnp_sparse(std::size_t n, double p, RngSeed seed) {
  check_args(n, p);
  std::vector<Edge> edges;
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p == 0.0 || pairs == 0) return Graph(n, std::move(edges));

  const double expected = static_cast<double>(pairs) * p;
  edges.reserve(static_cast<std::size_t>(
      std::min(expected * 1.1 + 16, static_cast<double>(Graph::kMaxEdges))));
  Xoshiro256 rng(seed);
  const double log_q = std::log1p(-p);

  // Row u of the upper triangle holds pairs (u, u+1..n-1).
  Vertex row = 0;
  std::uint64_t row_start = 0;
  std::uint64_t row_end = n - 1;
  std::uint64_t index = 0;
  bool first = true;
  for (;;) {
    const double gap = std::floor(std::log(rng.uniform_open_closed()) / log_q);
    const std::uint64_t remaining = pairs - index - (first ? 0 : 1);
    if (!(gap < static_cast<double>(remaining))) break;
    index += static_cast<std::uint64_t>(gap) + (first ? 0 : 1);
    first = false;
    while (index >= row_end) {
      ++row;
      row_start = row_end;
      row_end += n - 1 - row;
    }
    edges.push_back({row, static_cast<Vertex>(row + 1 + (index - row_start))});
    if (edges.size() > Graph::kMaxEdges) {
      throw DomainError("sampled graph exceeds edge limit");
    }
  }
  return Graph(n, std::move(edges));
}

Graph sample_gnp(std::size_t n, double p, RngSeed seed) {
  return p < kSparseKernelThreshold ? sample_gnp_sparse(n, p, seed)
                                    : sample_gnp_dense(n, p, seed);
}

}  // namespace mclab
