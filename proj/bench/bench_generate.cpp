// Compares the sequential reference search with the OpenMP split.
//
//   bench_generate [m] [threads] [limit]

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "hadamard/generator.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

struct Timing {
  std::uint64_t count;
  double seconds;
};

template <typename Run>
Timing measure(Run run) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t n = run();
  return {n, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

void report(const char* label, const Timing& t) {
  std::cout << label << ": " << t.count << " matrices in " << t.seconds << " s, v="
            << static_cast<long long>(t.count * 60.0 / t.seconds) << " matrices/minute\n";
}

}  // namespace

int main(int argc, char** argv) {
  const long long m = argc > 1 ? std::stoll(argv[1]) : 11;
  int threads = argc > 2 ? std::stoi(argv[2]) : 0;
#ifdef _OPENMP
  if (threads == 0) threads = omp_get_max_threads();
#endif
  if (threads == 0) threads = 1;

  hadamard::GenConfig cfg = hadamard::GenConfig::for_order(m);
  cfg.verify_each = false;
  if (argc > 3) cfg.limit = std::stoull(argv[3]);
  const hadamard::MatrixSink discard = [](const hadamard::PartitionMatrix&) {};

  const Timing serial = measure([&] { return hadamard::generate(cfg, discard); });
  const Timing parallel = measure([&] { return hadamard::generate_parallel(cfg, discard, threads); });

  std::cout << "m=" << m << ", " << threads << " threads\n";
  report("serial  ", serial);
  report("parallel", parallel);
  if (!cfg.limit && serial.count != parallel.count) {
    std::cerr << "count mismatch\n";
    return 1;
  }
  std::cout << "speedup " << serial.seconds / parallel.seconds << "x\n";
  return 0;
}
