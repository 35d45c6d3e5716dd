#pragma once

#include <cstddef>

#include "mclab/graph.hpp"
#include "mclab/rng.hpp"

namespace mclab {

// sample_gnp routes p below this value to the sparse kernel.
inline constexpr double kSparseKernelThreshold = 0.1;

// G(n,p): each of the C(n,2) pairs is present independently with
// probability p. Output is canonical and a pure function of (n, p, seed).
// Throws DomainError for p outside [0,1] (NaN included) or n == 0.
Graph sample_gnp(std::size_t n, double p, RngSeed seed);

// Reference kernel: one uniform draw per pair, pairs in canonical order,
// pair present iff draw < p.
Graph sample_gnp_dense(std::size_t n, double p, RngSeed seed);

// Geometric skipping over the linear pair index: gap = floor(log(U) /
// log(1-p)) with U uniform on (0,1]. Expected cost O(n + m).
Graph sample_gnp_sparse(std::size_t n, double p, RngSeed seed);

}  // namespace mclab
