#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>

#include "hadamard/core.hpp"
#include "hadamard/partition.hpp"
#include "hadamard/solver.hpp"

namespace hadamard {

/// Receives each complete matrix. In parallel mode calls are serialized by the
/// generator, so the sink itself needs no locking.
using MatrixSink = std::function<void(const PartitionMatrix&)>;

struct GenConfig {
  SearchParams params;
  std::optional<std::uint64_t> limit;
  bool verify_each = true;
  /// Writes "i=<row>" to `diagnostics` on every row entry.
  bool progress = false;
  std::ostream* diagnostics = nullptr;
  /// Stop once this much wall time has elapsed (checked on row entry).
  std::optional<std::chrono::milliseconds> time_budget;
  /// Sees every system built during the search. Not called concurrently.
  std::function<void(const RowSystem&)> system_observer;

  /// Defaults: verify_each for m <= 15, no limit, no progress.
  static GenConfig for_order(long long m);
};

/// Fixed first two rows: [(0,2q),(1,2q-1)] and [(0,q),(1,q),(2,q),(3,q-1)],
/// the last group dropped when q = 1.
std::pair<GroupList, GroupList> initial_rows(const SearchParams& params);

/// Children (2l, k[s]) and (2l+1, count[s]-k[s]) of each parent group, empty
/// children omitted.
GroupList child_row(const GroupList& parent, const std::vector<int>& k);

/// Sequential depth-first search; emission order is deterministic.
/// Returns the number of matrices passed to sink.
std::uint64_t generate(const GenConfig& config, const MatrixSink& sink);

/// Same search with the subtrees below row 3 distributed over OpenMP threads.
/// Emits the same multiset as generate() when run to completion; the order is
/// unspecified. threads = 0 keeps the OpenMP default.
std::uint64_t generate_parallel(const GenConfig& config, const MatrixSink& sink, int threads = 0);

}  // namespace hadamard
