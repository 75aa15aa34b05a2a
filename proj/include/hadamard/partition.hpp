#pragma once

#include <cstdint>
#include <vector>

#include "hadamard/core.hpp"

namespace hadamard {

/// Labels are refinement histories: the children of label l are 2l (ones)
/// and 2l+1 (zeros). A row at depth d carries labels below 2^d, so the widest
/// supported side is 63.
inline constexpr int kMaxPartitionOrder = 63;

/// A group list violates the refinement rules.
class InvalidPartition : public Error {
 public:
  using Error::Error;
};

struct Group {
  std::uint64_t label = 0;
  int count = 0;

  friend bool operator==(const Group&, const Group&) = default;
  friend auto operator<=>(const Group&, const Group&) = default;
};

/// One row as (label, count) pairs; depth is the 1-based row index.
struct GroupList {
  int depth = 0;
  std::vector<Group> groups;

  int total() const;
  friend bool operator==(const GroupList&, const GroupList&) = default;
  friend auto operator<=>(const GroupList&, const GroupList&) = default;
};

struct PartitionMatrix {
  int m = 0;
  std::vector<GroupList> rows;

  friend bool operator==(const PartitionMatrix&, const PartitionMatrix&) = default;
  friend auto operator<=>(const PartitionMatrix&, const PartitionMatrix&) = default;
};

/// The depth-0 list [(0, m)] that every first row refines.
GroupList root_group_list(int m);

/// Checks the standalone invariants: positive counts, strictly increasing
/// labels below 2^depth, counts summing to m.
void check_group_list(const GroupList& g, int m);

/// Checks that child refines parent: every child label l has l/2 present in
/// parent and the children of each parent group sum to its count.
void check_refines(const GroupList& child, const GroupList& parent);

/// Full structural check of a partition matrix; throws InvalidPartition.
void check_partition_matrix(const PartitionMatrix& p);

/// Even labels expand to ones, odd labels to zeros.
BitVector decode_row(const GroupList& g);

/// Groups bits by the spans of parent. Throws NonCanonicalRow (tagged with
/// row_index) if a one follows a zero inside some parent span.
GroupList encode_row(std::span<const Bit> bits, const GroupList& parent, std::size_t row_index = 0);

/// True iff encode_row(bits, parent) would succeed.
bool is_canonical_row(std::span<const Bit> bits, const GroupList& parent);

PartitionMatrix encode_matrix(const BitMatrix& t);
BitMatrix decode_matrix(const PartitionMatrix& p);

/// Stable column sort on the column histories read top to bottom with 1
/// ordered before 0. The result is canonical and encodes without error.
BitMatrix canonicalize(const BitMatrix& t);

}  // namespace hadamard
