#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hadamard/io.hpp"

namespace hadamard::cli {

enum ExitStatus : int { kOk = 0, kVerifyFailed = 1, kUsageError = 2 };

struct GenerateOptions {
  long long m = 0;
  std::optional<std::uint64_t> limit;
  io::Format format = io::Format::grouplist;
  std::optional<bool> verify;  // unset: on for m <= 15
  bool progress = false;
  int parallel = 0;  // 0: sequential reference search
};

struct ConvertOptions {
  io::Format from = io::Format::grouplist;
  io::Format to = io::Format::grouplist;
  bool normalize = false;
};

struct BenchOptions {
  long long m = 0;
  std::optional<std::uint64_t> limit;
  std::optional<double> seconds;
  int parallel = 0;
};

/// Each command writes records to `out` and messages to `diag`; errors are
/// reported on `diag` and mapped to an exit status.
int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& diag);
int cmd_verify(std::istream& in, io::Format format, std::ostream& report, std::ostream& diag);
int cmd_convert(std::istream& in, const ConvertOptions& opt, std::ostream& out, std::ostream& diag);
int cmd_bench(const BenchOptions& opt, std::ostream& report, std::ostream& diag);

/// "v=<rate> matrices/minute".
std::string rate_line(std::uint64_t count, double seconds);

}  // namespace hadamard::cli
