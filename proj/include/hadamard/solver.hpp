#pragma once

#include <cstdint>
#include <vector>

#include "hadamard/core.hpp"
#include "hadamard/partition.hpp"

namespace hadamard {

/// sum of k[v] over v in vars == rhs; all coefficients are 1.
struct Equation {
  std::vector<int> vars;
  int rhs = 0;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Linear system for the group occupancies k[s] of row `row`: one variable per
/// group s of the parent row, bounded by 0 <= k[s] <= upper[s].
struct RowSystem {
  int row = 0;
  std::vector<int> upper;
  std::vector<Equation> equations;
};

/// Weight equation (sum k = 2q) followed by one overlap equation (= q) per
/// earlier row j = row-1 .. 1, selecting the groups whose label has a 0 in bit
/// (row-1-j), i.e. the columns that carry a 1 in row j.
RowSystem build_system(const GroupList& parent, int row, const SearchParams& params);

/// Reduced form of a RowSystem prepared for enumeration.
///
/// Gauss-Jordan elimination in exact integer arithmetic, picking pivot columns
/// from the highest variable index down, so the free variables are the
/// lowest-indexed ones. Solutions are produced by an odometer over the free
/// variables in ascending index order (first free variable fastest), starting
/// from all zeros; each dependent variable is recovered from its pivot row and
/// the assignment is skipped if any value is fractional or out of bounds.
class SolutionEnumerator {
 public:
  explicit SolutionEnumerator(const RowSystem& sys);

  bool infeasible() const noexcept { return infeasible_; }
  const std::vector<int>& free_vars() const noexcept { return free_; }
  const std::vector<int>& dependent_vars() const noexcept { return pivot_col_; }

  /// Calls f(const std::vector<int>& k) for each solution in order; stops early
  /// when f returns false. Returns false iff stopped early.
  template <typename F>
  bool for_each(F&& f) const;

  std::vector<std::vector<int>> all() const;

 private:
  bool resolve_dependents(const std::vector<std::int64_t>& numer, std::vector<int>& k) const;

  std::vector<int> upper_;
  std::vector<int> free_;
  std::vector<int> pivot_col_;                    // dependent variable of each pivot row
  std::vector<std::int64_t> pivot_;               // its coefficient
  std::vector<std::int64_t> rhs_;                 // pivot row right-hand side
  std::vector<std::vector<std::int64_t>> coeff_;  // [pivot row][free index]
  bool infeasible_ = false;
};

std::vector<std::vector<int>> enumerate_solutions(const RowSystem& sys);

template <typename F>
bool SolutionEnumerator::for_each(F&& f) const {
  if (infeasible_) return true;
  const std::size_t nf = free_.size();
  const std::size_t nd = pivot_col_.size();
  std::vector<int> k(upper_.size(), 0);
  std::vector<std::int64_t> numer(rhs_);
  std::vector<int> kr(nf, 0);
  for (;;) {
    if (resolve_dependents(numer, k)) {
      if (!f(static_cast<const std::vector<int>&>(k))) return false;
    }
    std::size_t r = 0;
    for (; r < nf; ++r) {
      const int v = free_[r];
      if (kr[r] < upper_[v]) {
        ++kr[r];
        k[v] = kr[r];
        for (std::size_t d = 0; d < nd; ++d) numer[d] -= coeff_[d][r];
        break;
      }
      for (std::size_t d = 0; d < nd; ++d) numer[d] += coeff_[d][r] * kr[r];
      kr[r] = 0;
      k[v] = 0;
    }
    if (r == nf) return true;
  }
}

}  // namespace hadamard
