#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "hadamard/generator.hpp"
#include "hadamard/gram.hpp"
#include "hadamard/presentation.hpp"

namespace hadamard::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t run_generation(const GenConfig& config, int parallel, const MatrixSink& sink) {
  return parallel > 0 ? generate_parallel(config, sink, parallel) : generate(config, sink);
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string rate_line(std::uint64_t count, double seconds) {
  std::ostringstream s;
  s << "v=";
  if (seconds > 0)
    s << std::llround(static_cast<double>(count) * 60.0 / seconds);
  else
    s << "inf";
  s << " matrices/minute";
  return s.str();
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& diag) {
  try {
    GenConfig config = GenConfig::for_order(opt.m);
    config.limit = opt.limit;
    if (opt.verify) config.verify_each = *opt.verify;
    config.progress = opt.progress;
    config.diagnostics = &diag;

    io::RecordWriter writer(out, opt.format);
    const auto start = Clock::now();
    const std::uint64_t count =
        run_generation(config, opt.parallel, [&](const PartitionMatrix& p) { writer.write(p); });
    out.flush();
    const double secs = seconds_since(start);
    if (!out) {
      diag << "error: failed writing output\n";
      return kUsageError;
    }
    diag << "generated " << count << " matrices of order " << config.params.m << " in "
         << std::fixed << std::setprecision(3) << secs << " s\n";
    return kOk;
  } catch (const InvalidOrder& e) {
    diag << e.what() << '\n';
    return kUsageError;
  } catch (const InternalInvariantViolation& e) {
    diag << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_verify(std::istream& in, io::Format format, std::ostream& report, std::ostream& diag) {
  std::size_t total = 0;
  std::size_t failed = 0;
  auto line = [&](std::size_t idx, std::size_t lineno, const std::string& name, bool ok,
                  const std::string& extra) {
    ++total;
    if (!ok) ++failed;
    report << "record " << idx << " (line " << lineno;
    if (!name.empty()) report << ", " << name;
    report << "): " << verdict(ok) << extra << '\n';
  };
  try {
    switch (format) {
      case io::Format::grouplist: {
        const auto recs = io::read_grouplist(in);
        for (std::size_t i = 0; i < recs.size(); ++i)
          line(i + 1, recs[i].line, recs[i].name, is_hadamard_zo(decode_matrix(recs[i].matrix)),
               "");
        break;
      }
      case io::Format::dense01: {
        const auto recs = io::read_dense01(in);
        for (std::size_t i = 0; i < recs.size(); ++i)
          line(i + 1, recs[i].line, "", is_hadamard_zo(recs[i].matrix), "");
        break;
      }
      case io::Format::densepm: {
        const auto recs = io::read_densepm(in);
        for (std::size_t i = 0; i < recs.size(); ++i) {
          const SignMatrix& h = recs[i].matrix;
          const bool sign_ok = verify_sign_hadamard(h);
          const bool zo_ok = h.size() >= 2 && is_hadamard_zo(zo_from_pm(normalize_signs(h)));
          line(i + 1, recs[i].line, "", sign_ok && zo_ok,
               std::string(" (sign ") + verdict(sign_ok) + ", {0,1} " + verdict(zo_ok) + ")");
        }
        break;
      }
    }
  } catch (const io::ParseError& e) {
    diag << "parse error: " << e.what() << '\n';
    return kUsageError;
  }
  if (failed == 0)
    report << "all " << total << " records pass\n";
  else
    report << failed << " of " << total << " records fail\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_convert(std::istream& in, const ConvertOptions& opt, std::ostream& out,
                std::ostream& diag) {
  try {
    io::RecordWriter writer(out, opt.to);
    switch (opt.from) {
      case io::Format::grouplist:
        for (const auto& r : io::read_grouplist(in)) writer.write(r.matrix);
        break;
      case io::Format::dense01:
        for (const auto& r : io::read_dense01(in)) {
          try {
            writer.write(r.matrix);
          } catch (const NonCanonicalRow& e) {
            throw io::ParseError(r.line + e.row(), e.what());
          }
        }
        break;
      case io::Format::densepm:
        for (const auto& r : io::read_densepm(in)) {
          if (opt.to == io::Format::densepm) {
            writer.write(opt.normalize ? normalize(r.matrix) : r.matrix);
            continue;
          }
          if (!opt.normalize && !is_normalized(r.matrix))
            throw NotNormalized("line " + std::to_string(r.line) +
                                ": matrix is not normalized (pass --normalize)");
          writer.write(opt.normalize ? normalize(r.matrix) : r.matrix);
        }
        break;
    }
    out.flush();
    if (!out) {
      diag << "error: failed writing output\n";
      return kUsageError;
    }
    return kOk;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_bench(const BenchOptions& opt, std::ostream& report, std::ostream& diag) {
  try {
    GenConfig config = GenConfig::for_order(opt.m);
    config.verify_each = false;
    config.limit = opt.limit;
    if (opt.seconds)
      config.time_budget = std::chrono::milliseconds(std::llround(*opt.seconds * 1000.0));
    const auto start = Clock::now();
    const std::uint64_t count = run_generation(config, opt.parallel, [](const PartitionMatrix&) {});
    const double secs = seconds_since(start);
    report << "m=" << config.params.m << ": " << count << " matrices in " << std::fixed
           << std::setprecision(3) << secs << " s"
           << (opt.parallel > 0 ? " (parallel, " + std::to_string(opt.parallel) + " threads)" : "")
           << '\n'
           << rate_line(count, secs) << '\n';
    return kOk;
  } catch (const InvalidOrder& e) {
    diag << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace hadamard::cli
