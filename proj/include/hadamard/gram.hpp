#pragma once

#include <optional>
#include <vector>

#include "hadamard/core.hpp"

namespace hadamard {

using IntMatrix = std::vector<std::vector<int>>;

/// Expected Gram pattern of a {0,1} Hadamard matrix of side m: b on the
/// diagonal, a everywhere else, with b = 2a and m = 4a - 1.
struct GramTarget {
  int m = 0;
  int a = 0;
  int b = 0;
};

/// nullopt unless m = 3 (mod 4) and m > 1.
std::optional<GramTarget> gram_target(std::size_t m);

IntMatrix gram_rows(const BitMatrix& t);
IntMatrix gram_cols(const BitMatrix& t);

bool matches_target(const IntMatrix& g, const GramTarget& target);

/// Hadamard test on the row Gram matrix.
bool is_hadamard_zo(const BitMatrix& t);

/// Hadamard test on the column Gram matrix. Always agrees with is_hadamard_zo.
bool is_hadamard_zo_columns(const BitMatrix& t);

}  // namespace hadamard
