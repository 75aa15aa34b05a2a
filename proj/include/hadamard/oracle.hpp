#pragma once

#include <set>

#include "hadamard/core.hpp"
#include "hadamard/partition.hpp"

namespace hadamard {

/// Largest order brute_force_canonical accepts without allow_large.
inline constexpr int kOracleDefaultMaxOrder = 7;

/// All weight-2q bit vectors of length m in lexicographic order, 1 before 0.
std::vector<BitVector> weight_rows(int m, int weight);

/// Every m x m {0,1} Hadamard matrix whose first two rows decode from
/// initial_rows(params), found by depth-first search over all weight-2q rows
/// with pairwise overlap q, then column-canonicalized and encoded.
/// Throws OrderTooLarge for m > 7 unless allow_large is set.
std::set<PartitionMatrix> brute_force_canonical(int m, const SearchParams& params,
                                                bool allow_large = false);

/// The same set reached differently: the search only accepts a row when it is
/// ones-first within the spans left by the earlier rows, so each canonical
/// matrix is met exactly once. Practical up to m = 11.
std::set<PartitionMatrix> brute_force_canonical_ordered(const SearchParams& params);

}  // namespace hadamard
