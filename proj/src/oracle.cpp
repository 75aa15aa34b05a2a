#include "hadamard/oracle.hpp"

#include <algorithm>
#include <string>

#include "hadamard/generator.hpp"

namespace hadamard {

namespace {

bool overlaps_all(const BitVector& cand, const std::vector<BitVector>& rows, int q) {
  return std::all_of(rows.begin(), rows.end(),
                     [&](const BitVector& r) { return dot(cand, r) == q; });
}

std::vector<BitVector> fixed_rows(const SearchParams& params) {
  auto [r1, r2] = initial_rows(params);
  return {decode_row(r1), decode_row(r2)};
}

}  // namespace

std::vector<BitVector> weight_rows(int m, int weight) {
  std::vector<BitVector> out;
  BitVector v(static_cast<std::size_t>(m), 0);
  std::fill(v.begin(), v.begin() + weight, Bit{1});
  do {
    out.push_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

std::set<PartitionMatrix> brute_force_canonical(int m, const SearchParams& params,
                                                bool allow_large) {
  if (m != params.m) throw std::invalid_argument("brute_force_canonical: order mismatch");
  if (m > kOracleDefaultMaxOrder && !allow_large)
    throw OrderTooLarge("brute_force_canonical: m=" + std::to_string(m) +
                        " exceeds the default cap of " +
                        std::to_string(kOracleDefaultMaxOrder));
  const auto candidates = weight_rows(m, params.b);
  std::vector<BitVector> rows = fixed_rows(params);
  std::set<PartitionMatrix> found;

  auto dfs = [&](auto& self) -> void {
    if (rows.size() == static_cast<std::size_t>(m)) {
      found.insert(encode_matrix(canonicalize(BitMatrix(rows))));
      return;
    }
    for (const BitVector& c : candidates) {
      if (!overlaps_all(c, rows, params.a)) continue;
      rows.push_back(c);
      self(self);
      rows.pop_back();
    }
  };
  dfs(dfs);
  return found;
}

std::set<PartitionMatrix> brute_force_canonical_ordered(const SearchParams& params) {
  const int m = params.m;
  const auto candidates = weight_rows(m, params.b);
  std::vector<BitVector> rows = fixed_rows(params);
  std::vector<GroupList> lists;
  {
    GroupList parent = root_group_list(m);
    for (const BitVector& r : rows) {
      lists.push_back(encode_row(r, parent));
      parent = lists.back();
    }
  }
  std::set<PartitionMatrix> found;

  auto dfs = [&](auto& self) -> void {
    if (rows.size() == static_cast<std::size_t>(m)) {
      found.insert(PartitionMatrix{m, lists});
      return;
    }
    for (const BitVector& c : candidates) {
      if (!is_canonical_row(c, lists.back()) || !overlaps_all(c, rows, params.a)) continue;
      rows.push_back(c);
      lists.push_back(encode_row(c, lists[lists.size() - 1], rows.size() - 1));
      self(self);
      lists.pop_back();
      rows.pop_back();
    }
  };
  dfs(dfs);
  return found;
}

}  // namespace hadamard
