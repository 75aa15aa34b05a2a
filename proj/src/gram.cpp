#include "hadamard/gram.hpp"

namespace hadamard {

std::optional<GramTarget> gram_target(std::size_t m) {
  if (m < 3 || m % 4 != 3) return std::nullopt;
  const int q = static_cast<int>((m + 1) / 4);
  return GramTarget{static_cast<int>(m), q, 2 * q};
}

IntMatrix gram_rows(const BitMatrix& t) {
  const std::size_t m = t.size();
  IntMatrix g(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) g[i][j] = g[j][i] = dot(t.row(i), t.row(j));
  return g;
}

IntMatrix gram_cols(const BitMatrix& t) { return gram_rows(t.transpose()); }

bool matches_target(const IntMatrix& g, const GramTarget& target) {
  if (g.size() != static_cast<std::size_t>(target.m)) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[i][j] != (i == j ? target.b : target.a)) return false;
  return true;
}

bool is_hadamard_zo(const BitMatrix& t) {
  const auto target = gram_target(t.size());
  return target && matches_target(gram_rows(t), *target);
}

bool is_hadamard_zo_columns(const BitMatrix& t) {
  const auto target = gram_target(t.size());
  return target && matches_target(gram_cols(t), *target);
}

}  // namespace hadamard
