#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

// Provenance of a bound or exact value.
enum class Certificate {
  kTreeLower,          // m-n+2 from the spanning-tree coloring
  kMinDegreeUpper,     // m-n+delta+1
  kChromaticUpper,     // m-n+chi
  kConnectivityUpper,  // m-n+kappa+1 (G is not (kappa+1)-connected)
  kCyExactA,           // complement 4-connected
  kCyExactB,           // triangle-free
  kCyExactC,           // max degree condition
  kCyExactD,           // diameter >= 3
  kCyExactE,           // cut vertex
  kCompleteGraph,
  kDisconnected,
  kExactSearch,
};

std::string_view to_string(Certificate c);

// The five sufficient conditions for mc(G) = m-n+2 (connected, n > 3).
enum class ExactnessCondition {
  kComplementFourConnected,
  kTriangleFree,
  kMaxDegree,
  kDiameterAtLeastThree,
  kCutVertex,
};

char condition_letter(ExactnessCondition c);
Certificate to_certificate(ExactnessCondition c);

struct ExactnessCertificate {
  // Every condition that holds, in (a)..(e) order; never empty.
  std::vector<ExactnessCondition> conditions;
  std::size_t value = 0;  // m-n+2
};

struct UpperBound {
  std::size_t value = 0;
  // Every ladder rung that attains `value`.
  std::vector<Certificate> achieved_by;
};

struct McBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  std::vector<Certificate> certificates;

  bool has(Certificate c) const;
};

// m-n+2 for connected graphs with n >= 2; 0 when disconnected and for K_1.
std::size_t mc_lower_bound(const Graph& g);

// Minimum of m-n+delta+1, m-n+chi (only when n <= chi_cap) and
// m-n+kappa+1, capped by C(n,2). Throws NotConnectedError, and DomainError
// for n < 2.
UpperBound mc_upper_bound(const Graph& g,
                          std::size_t chi_cap = kDefaultChromaticCap);

// Conditions under which mc(G) = m-n+2. Throws HypothesisError for n <= 3
// and NotConnectedError for disconnected input.
std::optional<ExactnessCertificate> tree_bound_exactness(const Graph& g);

inline constexpr std::size_t kDefaultExactEdgeCap = 12;

struct ExactOptions {
  std::size_t edge_cap = kDefaultExactEdgeCap;
  // Skip branches that cannot beat the best count found so far.
  bool prune = true;
};

// mc(G) by enumerating set partitions of the edge set as restricted growth
// strings. Returns 0 for disconnected graphs; throws TooLargeError when
// m > edge_cap.
std::size_t exact_mc_small(const Graph& g, const ExactOptions& options = {});

struct AnalyzeOptions {
  std::size_t chi_cap = kDefaultChromaticCap;
  std::size_t exact_cap = kDefaultExactEdgeCap;
  // Run exact_mc_small when the bounds leave a gap and m <= exact_cap.
  bool request_exact = false;
};

McBounds analyze(const Graph& g, const AnalyzeOptions& options = {});

}  // namespace mclab
