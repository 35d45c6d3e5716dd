#include "mclab/mc_bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "mclab/coloring.hpp"
#include "mclab/errors.hpp"

namespace mclab {

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::kTreeLower: return "TREE_LOWER";
    case Certificate::kMinDegreeUpper: return "MIN_DEGREE_UPPER";
    case Certificate::kChromaticUpper: return "CHROMATIC_UPPER";
    case Certificate::kConnectivityUpper: return "CONNECTIVITY_UPPER";
    case Certificate::kCyExactA: return "CY_EXACT_A";
    case Certificate::kCyExactB: return "CY_EXACT_B";
    case Certificate::kCyExactC: return "CY_EXACT_C";
    case Certificate::kCyExactD: return "CY_EXACT_D";
    case Certificate::kCyExactE: return "CY_EXACT_E";
    case Certificate::kCompleteGraph: return "COMPLETE_GRAPH";
    case Certificate::kDisconnected: return "DISCONNECTED";
    case Certificate::kExactSearch: return "EXACT_SEARCH";
  }
  return "?";
}

char condition_letter(ExactnessCondition c) {
  return static_cast<char>('a' + static_cast<int>(c));
}

Certificate to_certificate(ExactnessCondition c) {
  return static_cast<Certificate>(static_cast<int>(Certificate::kCyExactA) +
                                  static_cast<int>(c));
}

bool McBounds::has(Certificate c) const {
  return std::find(certificates.begin(), certificates.end(), c) !=
         certificates.end();
}

namespace {

std::size_t pairs(std::size_t n) { return n * (n - 1) / 2; }

bool is_complete(const Graph& g) { return g.m() == pairs(g.n()); }

}  // namespace

std::size_t mc_lower_bound(const Graph& g) {
  if (g.n() == 1 || !is_connected(g)) return 0;
  return g.m() - g.n() + 2;
}

UpperBound mc_upper_bound(const Graph& g, std::size_t chi_cap) {
  if (g.n() < 2) throw DomainError("upper bound needs n >= 2");
  if (!is_connected(g)) throw NotConnectedError("upper bound");
  // Connected, so m >= n-1 and every rung below is non-negative.
  const std::size_t base = g.m() - g.n();

  std::vector<std::pair<std::size_t, Certificate>> rungs;
  rungs.emplace_back(base + min_degree(g) + 1, Certificate::kMinDegreeUpper);
  if (g.n() <= chi_cap) {
    rungs.emplace_back(base + chromatic_number_small(g, chi_cap),
                       Certificate::kChromaticUpper);
  }
  rungs.emplace_back(base + vertex_connectivity(g) + 1,
                     Certificate::kConnectivityUpper);

  UpperBound out;
  out.value = pairs(g.n());
  for (const auto& [value, tag] : rungs) out.value = std::min(out.value, value);
  for (const auto& [value, tag] : rungs) {
    if (value == out.value) out.achieved_by.push_back(tag);
  }
  return out;
}

std::optional<ExactnessCertificate> tree_bound_exactness(const Graph& g) {
  const std::size_t n = g.n();
  if (n <= 3) {
    throw HypothesisError("hypothesis violated: exactness conditions need "
                          "n > 3, got n = " + std::to_string(n));
  }
  if (!is_connected(g)) throw NotConnectedError("exactness conditions");

  ExactnessCertificate cert;
  cert.value = g.m() - n + 2;

  if (is_k_connected(complement(g), 4)) {
    cert.conditions.push_back(ExactnessCondition::kComplementFourConnected);
  }
  if (is_triangle_free(g)) {
    cert.conditions.push_back(ExactnessCondition::kTriangleFree);
  }
  // Delta < n - (2m - 3(n-1)) / (n-3), multiplied through by n-3 > 0.
  {
    const auto sn = static_cast<std::int64_t>(n);
    const auto sm = static_cast<std::int64_t>(g.m());
    const auto delta_max = static_cast<std::int64_t>(max_degree(g));
    if (delta_max * (sn - 3) < sn * (sn - 3) - (2 * sm - 3 * (sn - 1))) {
      cert.conditions.push_back(ExactnessCondition::kMaxDegree);
    }
  }
  if (auto d = diameter(g); d && *d >= 3) {
    cert.conditions.push_back(ExactnessCondition::kDiameterAtLeastThree);
  }
  if (has_cut_vertex(g)) {
    cert.conditions.push_back(ExactnessCondition::kCutVertex);
  }

  if (cert.conditions.empty()) return std::nullopt;
  return cert;
}

namespace {

using Mask = std::uint64_t;

// Restricted-growth-string enumeration of edge partitions. A leaf is scored
// only when it has more classes than the best MC-coloring seen so far.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, bool prune)
      : n_(g.n()), prune_(prune), labels_(g.m(), 0), parent_(g.n()) {
    for (const Edge& e : g.edges()) edges_.push_back(e);
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  std::size_t run(std::size_t initial_best) {
    best_ = initial_best;
    descend(0, 0);
    return best_;
  }

 private:
  void descend(std::size_t index, std::size_t classes) {
    const std::size_t m = edges_.size();
    if (prune_ && classes + (m - index) <= best_) return;
    if (index == m) {
      if (classes > best_ && is_mc(classes)) best_ = classes;
      return;
    }
    // The new class first: it reaches high class counts early.
    for (std::size_t j = classes + 1; j-- > 0;) {
      labels_[index] = static_cast<Color>(j);
      descend(index + 1, std::max(classes, j + 1));
    }
  }

  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool is_mc(std::size_t classes) {
    std::array<Mask, 64> cover{};
    std::array<Mask, 64> comp{};
    for (std::size_t c = 0; c < classes; ++c) {
      std::iota(parent_.begin(), parent_.end(), Vertex{0});
      Mask touched = 0;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (labels_[i] != c) continue;
        const Edge& e = edges_[i];
        touched |= (Mask{1} << e.u) | (Mask{1} << e.v);
        const Vertex a = find(e.u);
        const Vertex b = find(e.v);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
      }
      for (Mask t = touched; t != 0; t &= t - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(t));
        comp[v] = 0;
      }
      for (Mask t = touched; t != 0; t &= t - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(t));
        comp[find(v)] |= Mask{1} << v;
      }
      for (Mask t = touched; t != 0; t &= t - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(t));
        cover[v] |= comp[find(v)];
      }
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if ((cover[v] | (Mask{1} << v)) != full_) return false;
    }
    return true;
  }

  std::size_t n_;
  bool prune_;
  std::vector<Edge> edges_;
  std::vector<Color> labels_;
  std::vector<Vertex> parent_;
  Mask full_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t exact_mc_small(const Graph& g, const ExactOptions& options) {
  if (g.n() == 1 || !is_connected(g)) return 0;
  if (g.m() > options.edge_cap) {
    throw TooLargeError("graph with " + std::to_string(g.m()) +
                        " edges exceeds the exact search cap of " +
                        std::to_string(options.edge_cap));
  }
  if (g.n() > 64) {
    throw TooLargeError("exact search supports at most 64 vertices");
  }
  PartitionSearch search(g, options.prune);
  // With pruning the tree coloring's count seeds the search: any leaf must
  // beat it to matter.
  return search.run(options.prune ? g.m() - g.n() + 2 : 0);
}

McBounds analyze(const Graph& g, const AnalyzeOptions& options) {
  McBounds out;
  const std::size_t n = g.n();
  if (n == 1) {
    out.exact = 0;
    out.certificates.push_back(Certificate::kCompleteGraph);
    return out;
  }
  if (!is_connected(g)) {
    out.exact = 0;
    out.certificates.push_back(Certificate::kDisconnected);
    return out;
  }

  out.lower = mc_lower_bound(g);
  out.certificates.push_back(Certificate::kTreeLower);
  const UpperBound upper = mc_upper_bound(g, options.chi_cap);
  out.upper = upper.value;
  out.certificates.insert(out.certificates.end(), upper.achieved_by.begin(),
                          upper.achieved_by.end());

  if (is_complete(g)) {
    out.exact = pairs(n);
    out.certificates.push_back(Certificate::kCompleteGraph);
    return out;
  }
  if (n > 3) {
    if (auto cert = tree_bound_exactness(g)) {
      out.exact = cert->value;
      for (ExactnessCondition c : cert->conditions) {
        out.certificates.push_back(to_certificate(c));
      }
      return out;
    }
  }
  if (out.lower == out.upper) {
    out.exact = out.lower;
    return out;
  }
  if (options.request_exact && g.m() <= options.exact_cap) {
    out.exact = exact_mc_small(g, ExactOptions{options.exact_cap, true});
    out.certificates.push_back(Certificate::kExactSearch);
  }
  return out;
}

}  // namespace mclab
