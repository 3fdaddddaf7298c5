#pragma once

#include <optional>

#include "eef/model.hpp"

namespace eef {

// Minimal generating set of {b in Z^n, b >= 0, b != 0, b^T k = 0}, sorted by
// total degree and then by descending lexicographic order.
struct HilbertBasisSet {
  std::vector<std::vector<Int>> vectors;
  LatticeBasis kernel;

  std::size_t size() const { return vectors.size(); }
  std::size_t n_states() const { return kernel.n_states(); }
};

// Completion search over unit steps: a vector t grows in direction i only
// while <k^T t, k^T e_i> < 0, which reaches every minimal solution and
// terminates because the cone is pointed. Throws math_error when the cone
// is {0}.
HilbertBasisSet hilbert_basis(const LatticeBasis& k);

// Independent oracle: enumerates {0..bound}^n, keeps the orthogonal vectors,
// discards any that are sums of two enumerated ones. Requires bound >= 1 and
// (bound+1)^n <= 10^8.
HilbertBasisSet brute_force_basis(const LatticeBasis& k, unsigned long bound);

// Nonnegative integer multiplicities alpha with sum alpha_j b_j = b, found by
// exhaustive search; nullopt when no decomposition exists.
std::optional<std::vector<Int>> decompose(const std::vector<Int>& b,
                                          const HilbertBasisSet& basis);
std::optional<std::vector<Int>> decompose(const std::vector<Int>& b,
                                          const std::vector<std::vector<Int>>& vectors,
                                          std::size_t exclude_index);

// Indices (0-based) of elements whose zero set is empty or reproducible as
// an intersection of the other elements' zero sets.
std::vector<std::size_t> redundant_elements(const HilbertBasisSet& basis);

}  // namespace eef
