#include "hadamard/generator.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <string>

#include "hadamard/gram.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hadamard {

namespace {

using Clock = std::chrono::steady_clock;

std::string group_lists_debug(const PartitionMatrix& p) {
  std::string s;
  for (const GroupList& row : p.rows) {
    s += '[';
    for (const Group& g : row.groups) s += "(" + std::to_string(g.label) + "," + std::to_string(g.count) + ")";
    s += ']';
  }
  return s;
}

// State shared by every search branch of one generation run.
class Emitter {
 public:
  Emitter(const GenConfig& config, const MatrixSink& sink)
      : config_(config), sink_(sink), start_(Clock::now()) {}

  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  void stop() { stop_.store(true, std::memory_order_relaxed); }

  void check_budget() {
    if (config_.time_budget && Clock::now() - start_ >= *config_.time_budget)
      stop_.store(true, std::memory_order_relaxed);
  }

  void emit(const PartitionMatrix& p) {
    if (config_.verify_each && !is_hadamard_zo(decode_matrix(p)))
      throw InternalInvariantViolation("generated matrix of order " + std::to_string(p.m) +
                                       " fails the Gram check: " + group_lists_debug(p));
    std::lock_guard lock(mu_);
    if (stopped()) return;
    sink_(p);
    ++count_;
    if (config_.limit && count_ >= *config_.limit) stop_.store(true, std::memory_order_relaxed);
  }

  void observe(const RowSystem& sys) {
    if (!config_.system_observer) return;
    std::lock_guard lock(mu_);
    config_.system_observer(sys);
  }

  void progress(int i) {
    if (!config_.progress || config_.diagnostics == nullptr) return;
    std::lock_guard lock(mu_);
    *config_.diagnostics << "i=" << i << '\n';
  }

  std::uint64_t count() const { return count_; }

 private:
  const GenConfig& config_;
  const MatrixSink& sink_;
  Clock::time_point start_;
  std::mutex mu_;
  std::atomic<bool> stop_{false};
  std::uint64_t count_ = 0;
};

// Builds row i of `rows` (which holds rows 1..i-1) and recurses.
void make_row(int i, PartitionMatrix& rows, const SearchParams& params, Emitter& out) {
  out.check_budget();
  if (out.stopped()) return;
  out.progress(i);
  const GroupList& parent = rows.rows[static_cast<std::size_t>(i - 2)];
  const RowSystem sys = build_system(parent, i, params);
  out.observe(sys);
  SolutionEnumerator(sys).for_each([&](const std::vector<int>& k) {
    rows.rows.push_back(child_row(rows.rows[static_cast<std::size_t>(i - 2)], k));
    if (i == params.m)
      out.emit(rows);
    else
      make_row(i + 1, rows, params, out);
    rows.rows.pop_back();
    return !out.stopped();
  });
}

PartitionMatrix seed(const SearchParams& params) {
  auto [r1, r2] = initial_rows(params);
  PartitionMatrix p{params.m, {}};
  p.rows.reserve(static_cast<std::size_t>(params.m));
  p.rows.push_back(std::move(r1));
  p.rows.push_back(std::move(r2));
  return p;
}

void check_config(const GenConfig& config) {
  const SearchParams p = validate_order(config.params.m);
  if (p.m > kMaxPartitionOrder)
    throw InvalidOrder(p.m);
  if (config.limit && *config.limit == 0) throw std::invalid_argument("limit must be at least 1");
}

}  // namespace

GenConfig GenConfig::for_order(long long m) {
  GenConfig c;
  c.params = validate_order(m);
  c.verify_each = c.params.m <= 15;
  return c;
}

std::pair<GroupList, GroupList> initial_rows(const SearchParams& params) {
  const int q = params.q;
  GroupList r1{1, {{0, 2 * q}, {1, 2 * q - 1}}};
  GroupList r2{2, {{0, q}, {1, q}, {2, q}}};
  if (q > 1) r2.groups.push_back(Group{3, q - 1});
  return {std::move(r1), std::move(r2)};
}

GroupList child_row(const GroupList& parent, const std::vector<int>& k) {
  GroupList out{parent.depth + 1, {}};
  out.groups.reserve(2 * parent.groups.size());
  for (std::size_t s = 0; s < parent.groups.size(); ++s) {
    const Group& g = parent.groups[s];
    if (k[s] != 0) out.groups.push_back(Group{2 * g.label, k[s]});
    if (g.count - k[s] != 0) out.groups.push_back(Group{2 * g.label + 1, g.count - k[s]});
  }
  return out;
}

std::uint64_t generate(const GenConfig& config, const MatrixSink& sink) {
  check_config(config);
  Emitter out(config, sink);
  PartitionMatrix rows = seed(config.params);
  make_row(3, rows, config.params, out);
  return out.count();
}

std::uint64_t generate_parallel(const GenConfig& config, const MatrixSink& sink, int threads) {
  check_config(config);
  const SearchParams& params = config.params;
  Emitter out(config, sink);
  PartitionMatrix base = seed(params);

  out.progress(3);
  const RowSystem sys = build_system(base.rows[1], 3, params);
  out.observe(sys);
  const auto row3 = SolutionEnumerator(sys).all();
  if (params.m == 3) {
    for (const auto& k : row3) {
      base.rows.push_back(child_row(base.rows[1], k));
      out.emit(base);
      base.rows.pop_back();
    }
    return out.count();
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  std::exception_ptr failure;
  std::mutex failure_mu;
  const long long tasks = static_cast<long long>(row3.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long t = 0; t < tasks; ++t) {
    if (out.stopped()) continue;
    try {
      PartitionMatrix rows = base;
      rows.rows.push_back(child_row(rows.rows[1], row3[static_cast<std::size_t>(t)]));
      make_row(4, rows, params, out);
    } catch (...) {
      out.stop();
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out.count();
}

}  // namespace hadamard
