#include "hadamard/solver.hpp"

#include <numeric>

namespace hadamard {

RowSystem build_system(const GroupList& parent, int row, const SearchParams& params) {
  RowSystem sys;
  sys.row = row;
  const int n = static_cast<int>(parent.groups.size());
  sys.upper.reserve(parent.groups.size());
  for (const Group& g : parent.groups) sys.upper.push_back(g.count);

  Equation weight_eq{{}, 2 * params.q};
  weight_eq.vars.resize(static_cast<std::size_t>(n));
  std::iota(weight_eq.vars.begin(), weight_eq.vars.end(), 0);
  sys.equations.push_back(std::move(weight_eq));

  std::uint64_t qq = 1;
  for (int j = row - 1; j >= 1; --j) {
    Equation eq{{}, params.q};
    for (int s = 0; s < n; ++s)
      if ((parent.groups[static_cast<std::size_t>(s)].label / qq) % 2 == 0) eq.vars.push_back(s);
    sys.equations.push_back(std::move(eq));
    qq *= 2;
  }
  return sys;
}

SolutionEnumerator::SolutionEnumerator(const RowSystem& sys) : upper_(sys.upper) {
  const std::size_t nv = upper_.size();
  std::vector<std::vector<std::int64_t>> a;
  a.reserve(sys.equations.size());
  for (const Equation& eq : sys.equations) {
    std::vector<std::int64_t> r(nv + 1, 0);
    for (int v : eq.vars) r[static_cast<std::size_t>(v)] += 1;
    r[nv] = eq.rhs;
    a.push_back(std::move(r));
  }

  auto reduce = [&](std::vector<std::int64_t>& r) {
    std::int64_t g = 0;
    for (std::int64_t x : r) g = std::gcd(g, x);
    if (g > 1)
      for (std::int64_t& x : r) x /= g;
  };

  std::vector<bool> used(a.size(), false);
  std::vector<bool> is_pivot(nv, false);
  std::vector<std::size_t> pivot_rows;
  for (std::size_t c = nv; c-- > 0;) {
    std::size_t p = a.size();
    for (std::size_t r = 0; r < a.size(); ++r)
      if (!used[r] && a[r][c] != 0) {
        p = r;
        break;
      }
    if (p == a.size()) continue;
    used[p] = true;
    is_pivot[c] = true;
    if (a[p][c] < 0)
      for (std::int64_t& x : a[p]) x = -x;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == p || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      const std::int64_t pv = a[p][c];
      for (std::size_t x = 0; x <= nv; ++x) a[r][x] = a[r][x] * pv - a[p][x] * f;
      reduce(a[r]);
    }
    pivot_rows.push_back(p);
    pivot_col_.push_back(static_cast<int>(c));
  }

  for (std::size_t r = 0; r < a.size(); ++r)
    if (!used[r] && a[r][nv] != 0) infeasible_ = true;

  for (std::size_t c = 0; c < nv; ++c)
    if (!is_pivot[c]) free_.push_back(static_cast<int>(c));

  for (std::size_t d = 0; d < pivot_rows.size(); ++d) {
    const auto& r = a[pivot_rows[d]];
    pivot_.push_back(r[static_cast<std::size_t>(pivot_col_[d])]);
    rhs_.push_back(r[nv]);
    std::vector<std::int64_t> c;
    c.reserve(free_.size());
    for (int f : free_) c.push_back(r[static_cast<std::size_t>(f)]);
    coeff_.push_back(std::move(c));
  }
}

bool SolutionEnumerator::resolve_dependents(const std::vector<std::int64_t>& numer,
                                            std::vector<int>& k) const {
  for (std::size_t d = 0; d < pivot_col_.size(); ++d) {
    const std::int64_t x = numer[d];
    if (x < 0 || x % pivot_[d] != 0) return false;
    const std::int64_t v = x / pivot_[d];
    const int col = pivot_col_[d];
    if (v > upper_[static_cast<std::size_t>(col)]) return false;
    k[static_cast<std::size_t>(col)] = static_cast<int>(v);
  }
  return true;
}

std::vector<std::vector<int>> SolutionEnumerator::all() const {
  std::vector<std::vector<int>> out;
  for_each([&](const std::vector<int>& k) {
    out.push_back(k);
    return true;
  });
  return out;
}

std::vector<std::vector<int>> enumerate_solutions(const RowSystem& sys) {
  return SolutionEnumerator(sys).all();
}

}  // namespace hadamard
