#include "hadamard/presentation.hpp"

namespace hadamard {

namespace {

template <typename At>
bool orthogonal_lines(std::size_t n, At at) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += at(i, k) * at(j, k);
      if (s != (i == j ? static_cast<long long>(n) : 0)) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_sign_hadamard(const SignMatrix& h) {
  return orthogonal_lines(h.size(), [&](std::size_t i, std::size_t k) { return h(i, k); });
}

bool verify_sign_hadamard_columns(const SignMatrix& h) {
  return orthogonal_lines(h.size(), [&](std::size_t i, std::size_t k) { return h(k, i); });
}

bool is_normalized(const SignMatrix& h) {
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h(0, k) != 1 || h(k, 0) != 1) return false;
  return true;
}

SignMatrix normalize_signs(SignMatrix h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h(i, 0) == -1) h.negate_row(i);
  for (std::size_t j = 0; j < h.size(); ++j)
    if (h(0, j) == -1) h.negate_col(j);
  return h;
}

SignMatrix normalize(const SignMatrix& h) {
  if (!verify_sign_hadamard(h)) throw NotHadamard("normalize: input is not a Hadamard matrix");
  return normalize_signs(h);
}

BitMatrix zo_from_pm(const SignMatrix& h) {
  if (h.size() < 2) throw NotNormalized("zo_from_pm: order must be at least 2");
  if (!is_normalized(h))
    throw NotNormalized("zo_from_pm: first row and column must contain only +1");
  const std::size_t m = h.size() - 1;
  BitMatrix t(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t.set(i, j, h(i + 1, j + 1) == -1);
  return t;
}

SignMatrix pm_from_zo(const BitMatrix& t) {
  const std::size_t n = t.size() + 1;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) rows[i + 1][j + 1] = 1 - 2 * t(i, j);
  return SignMatrix(std::move(rows));
}

}  // namespace hadamard
