#include "hadamard/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hadamard {

int GroupList::total() const {
  return std::accumulate(groups.begin(), groups.end(), 0,
                         [](int s, const Group& g) { return s + g.count; });
}

GroupList root_group_list(int m) { return GroupList{0, {Group{0, m}}}; }

void check_group_list(const GroupList& g, int m) {
  if (g.depth < 0 || g.depth > kMaxPartitionOrder)
    throw InvalidPartition("group list depth " + std::to_string(g.depth) + " out of range");
  if (g.groups.empty()) throw InvalidPartition("empty group list");
  const std::uint64_t limit = std::uint64_t{1} << g.depth;
  for (std::size_t s = 0; s < g.groups.size(); ++s) {
    const Group& gr = g.groups[s];
    if (gr.count < 1)
      throw InvalidPartition("group " + std::to_string(gr.label) + " has nonpositive count");
    if (gr.label >= limit)
      throw InvalidPartition("label " + std::to_string(gr.label) + " exceeds 2^" +
                             std::to_string(g.depth));
    if (s > 0 && g.groups[s - 1].label >= gr.label)
      throw InvalidPartition("labels are not strictly increasing at " + std::to_string(gr.label));
  }
  if (g.total() != m)
    throw InvalidPartition("counts sum to " + std::to_string(g.total()) + ", expected " +
                           std::to_string(m));
}

void check_refines(const GroupList& child, const GroupList& parent) {
  if (child.depth != parent.depth + 1)
    throw InvalidPartition("depth " + std::to_string(child.depth) + " does not follow " +
                           std::to_string(parent.depth));
  std::size_t c = 0;
  for (const Group& p : parent.groups) {
    int sum = 0;
    while (c < child.groups.size() && child.groups[c].label / 2 == p.label) {
      sum += child.groups[c].count;
      ++c;
    }
    if (sum != p.count)
      throw InvalidPartition("children of group " + std::to_string(p.label) + " sum to " +
                             std::to_string(sum) + ", expected " + std::to_string(p.count));
  }
  if (c != child.groups.size())
    throw InvalidPartition("label " + std::to_string(child.groups[c].label) +
                           " has no parent group in row " + std::to_string(parent.depth));
}

void check_partition_matrix(const PartitionMatrix& p) {
  if (p.m < 1 || p.m > kMaxPartitionOrder)
    throw InvalidPartition("side " + std::to_string(p.m) + " out of range");
  if (p.rows.size() != static_cast<std::size_t>(p.m))
    throw InvalidPartition("expected " + std::to_string(p.m) + " rows, found " +
                           std::to_string(p.rows.size()));
  GroupList parent = root_group_list(p.m);
  for (const GroupList& row : p.rows) {
    check_group_list(row, p.m);
    check_refines(row, parent);
    parent = row;
  }
}

BitVector decode_row(const GroupList& g) {
  BitVector bits;
  bits.reserve(static_cast<std::size_t>(g.total()));
  for (const Group& gr : g.groups) bits.insert(bits.end(), gr.count, gr.label % 2 == 0 ? 1 : 0);
  return bits;
}

GroupList encode_row(std::span<const Bit> bits, const GroupList& parent, std::size_t row_index) {
  if (static_cast<int>(bits.size()) != parent.total())
    throw LengthMismatch("encode_row: row has " + std::to_string(bits.size()) +
                         " entries, parent covers " + std::to_string(parent.total()));
  if (parent.depth >= kMaxPartitionOrder)
    throw InvalidPartition("encode_row: depth exceeds label width");
  GroupList out{parent.depth + 1, {}};
  std::size_t pos = 0;
  for (const Group& p : parent.groups) {
    const auto span = bits.subspan(pos, static_cast<std::size_t>(p.count));
    const auto first_zero = std::find(span.begin(), span.end(), Bit{0});
    if (std::find(first_zero, span.end(), Bit{1}) != span.end())
      throw NonCanonicalRow(row_index, "ones do not precede zeros in the span of group " +
                                           std::to_string(p.label));
    const int ones = static_cast<int>(first_zero - span.begin());
    if (ones > 0) out.groups.push_back(Group{2 * p.label, ones});
    if (p.count - ones > 0) out.groups.push_back(Group{2 * p.label + 1, p.count - ones});
    pos += static_cast<std::size_t>(p.count);
  }
  return out;
}

bool is_canonical_row(std::span<const Bit> bits, const GroupList& parent) {
  if (static_cast<int>(bits.size()) != parent.total()) return false;
  std::size_t pos = 0;
  for (const Group& p : parent.groups) {
    bool seen_zero = false;
    for (std::size_t k = pos; k < pos + static_cast<std::size_t>(p.count); ++k) {
      if (bits[k] == 0)
        seen_zero = true;
      else if (seen_zero)
        return false;
    }
    pos += static_cast<std::size_t>(p.count);
  }
  return true;
}

PartitionMatrix encode_matrix(const BitMatrix& t) {
  const int m = static_cast<int>(t.size());
  if (m < 1 || m > kMaxPartitionOrder)
    throw InvalidPartition("encode_matrix: side " + std::to_string(m) + " out of range");
  PartitionMatrix p{m, {}};
  p.rows.reserve(t.size());
  GroupList parent = root_group_list(m);
  for (std::size_t i = 0; i < t.size(); ++i) {
    p.rows.push_back(encode_row(t.row(i), parent, i));
    parent = p.rows.back();
  }
  return p;
}

BitMatrix decode_matrix(const PartitionMatrix& p) {
  std::vector<BitVector> rows;
  rows.reserve(p.rows.size());
  for (const GroupList& g : p.rows) rows.push_back(decode_row(g));
  return BitMatrix(std::move(rows));
}

BitMatrix canonicalize(const BitMatrix& t) {
  const std::size_t m = t.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m; ++i)
      if (t(i, x) != t(i, y)) return t(i, x) > t(i, y);
    return false;
  });
  BitMatrix out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(i, j, t(i, order[j]));
  return out;
}

}  // namespace hadamard
