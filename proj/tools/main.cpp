#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "commands.hpp"

namespace {

using hadamard::io::Format;

const std::map<std::string, Format> kFormats{{"grouplist", Format::grouplist},
                                             {"dense01", Format::dense01},
                                             {"densepm", Format::densepm}};

// Runs fn with an output stream: the file at path, or stdout when path is empty.
template <typename Fn>
int with_output(const std::string& path, Fn fn) {
  if (path.empty()) return fn(std::cout);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return hadamard::cli::kUsageError;
  }
  return fn(file);
}

template <typename Fn>
int with_input(const std::string& path, Fn fn) {
  if (path == "-") return fn(std::cin);
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << '\n';
    return hadamard::cli::kUsageError;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = hadamard::cli;
  CLI::App app{"Generate, verify and convert Hadamard matrices in {0,1} presentation"};
  app.require_subcommand(1);

  cli::GenerateOptions gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Enumerate matrices of order m");
  generate->add_option("-m", gen.m, "Order (m >= 3, m = 3 mod 4)")->required();
  generate->add_option("-o", gen_out, "Output file (default: stdout)");
  generate->add_option("--limit", gen.limit, "Stop after N matrices")->check(CLI::PositiveNumber);
  generate->add_option("--format", gen.format, "grouplist | dense01 | densepm")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  generate->add_flag("--verify,!--no-verify", gen.verify,
                     "Check every matrix (default: on for m <= 15)");
  generate->add_flag("--progress", gen.progress, "Log row entries to stderr");
  generate->add_option("--parallel", gen.parallel, "Split the search over N threads")
      ->check(CLI::NonNegativeNumber);

  std::string verify_in;
  Format verify_format = Format::grouplist;
  auto* verify = app.add_subcommand("verify", "Check every record of a file");
  verify->add_option("input", verify_in, "Input file ('-' for stdin)")->required();
  verify->add_option("--format", verify_format, "grouplist | dense01 | densepm")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  cli::ConvertOptions conv;
  std::string conv_in;
  std::string conv_out;
  auto* convert = app.add_subcommand("convert", "Convert between file formats");
  convert->add_option("input", conv_in, "Input file ('-' for stdin)")->required();
  convert->add_option("--from", conv.from, "Input format")
      ->required()
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  convert->add_option("--to,--format", conv.to, "Output format")
      ->required()
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  convert->add_option("-o", conv_out, "Output file (default: stdout)");
  convert->add_flag("--normalize", conv.normalize, "Normalize sign matrices before converting");

  cli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Measure the production rate");
  bench_cmd->add_option("-m", bench.m, "Order")->required();
  bench_cmd->add_option("--limit", bench.limit, "Stop after N matrices")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--duration", bench.seconds, "Stop after this many seconds")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--parallel", bench.parallel, "Split the search over N threads")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsageError;
  }

  if (*generate)
    return with_output(gen_out, [&](std::ostream& out) { return cli::cmd_generate(gen, out, std::cerr); });
  if (*verify)
    return with_input(verify_in, [&](std::istream& in) {
      return cli::cmd_verify(in, verify_format, std::cout, std::cerr);
    });
  if (*convert)
    return with_input(conv_in, [&](std::istream& in) {
      return with_output(conv_out,
                         [&](std::ostream& out) { return cli::cmd_convert(in, conv, out, std::cerr); });
    });
  return cli::cmd_bench(bench, std::cout, std::cerr);
}
