// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 2 7        run criteria 2 and 7

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "fixtures.hpp"
#include "hadamard/generator.hpp"
#include "hadamard/gram.hpp"
#include "hadamard/io.hpp"
#include "hadamard/oracle.hpp"
#include "hadamard/presentation.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

using Clock = std::chrono::steady_clock;

// Reference counts quoted for comparison.
constexpr std::uint64_t kReportedCount7 = 25;
constexpr std::uint64_t kReportedCount11 = 60481;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += " [failed: " + what + "]";
    }
  }
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<PartitionMatrix> generate_all(GenConfig cfg) {
  std::vector<PartitionMatrix> out;
  generate(cfg, [&](const PartitionMatrix& p) { out.push_back(p); });
  return out;
}

void m3_completeness(Outcome& o) {
  const auto t0 = Clock::now();
  const auto out = generate_all(GenConfig::for_order(3));
  const double secs = since(t0);
  o.require(out.size() == 1, "exactly one matrix");
  o.require(!out.empty() && decode_matrix(out[0]) == fixtures::matrix3(), "matrix is [[1,1,0],[1,0,1],[0,1,1]]");
  o.require(secs < 1.0, "under 1 s");
  o.detail << "count=" << out.size() << " time=" << secs << "s";
}

void m7_count_and_soundness(Outcome& o) {
  const auto t0 = Clock::now();
  const auto out = generate_all(GenConfig::for_order(7));
  const auto params = validate_order(7);
  const auto oracle = brute_force_canonical(7, params);
  const double secs = since(t0);
  const std::set<PartitionMatrix> emitted(out.begin(), out.end());
  // The oracle count is authoritative over the reference count of 25.
  o.require(out.size() == oracle.size(), "count equals oracle count");
  o.require(emitted.size() == out.size(), "no duplicates");
  o.require(std::all_of(out.begin(), out.end(),
                        [](const PartitionMatrix& p) { return is_hadamard_zo(decode_matrix(p)); }),
            "every matrix passes is_hadamard_zo");
  o.require(emitted == oracle, "emitted set equals brute_force_canonical(7)");
  o.require(secs < 10.0, "under 10 s");
  o.detail << "generated=" << out.size() << " oracle=" << oracle.size()
           << " reference=" << kReportedCount7 << " time=" << secs << "s";
}

void m11_count(Outcome& o) {
  const auto t0 = Clock::now();
  const auto out = generate_all(GenConfig::for_order(11));
  const double secs = since(t0);
  std::mt19937_64 rng(11);
  bool sample_ok = true;
  for (std::size_t i : oracles::sample_indices(out.size(), 100, rng))
    sample_ok = sample_ok && is_hadamard_zo(decode_matrix(out[i]));
  const auto oracle = brute_force_canonical_ordered(validate_order(11));
  o.require(out.size() == kReportedCount11, "count equals 60481");
  o.require(sample_ok, "100 sampled matrices pass is_hadamard_zo");
  o.detail << "generated=" << out.size() << " reference=" << kReportedCount11
           << " oracle=" << oracle.size() << " time=" << secs << "s (informational bound 300s)";
}

void m15_soundness(Outcome& o) {
  const auto t0 = Clock::now();
  GenConfig cfg = GenConfig::for_order(15);
  cfg.limit = 1000;
  const auto out = generate_all(cfg);
  std::size_t rows_ok = 0;
  std::size_t dual_ok = 0;
  for (const auto& p : out) {
    const BitMatrix t = decode_matrix(p);
    const bool by_rows = is_hadamard_zo(t);
    rows_ok += by_rows;
    dual_ok += by_rows == is_hadamard_zo_columns(t);
  }
  const double secs = since(t0);
  o.require(out.size() == 1000, "1000 matrices");
  o.require(rows_ok == out.size(), "all pass is_hadamard_zo");
  o.require(dual_ok == out.size(), "row and column characterizations agree");
  o.require(secs < 60.0, "under 1 min");
  o.detail << "count=" << out.size() << " pass=" << rows_ok << " dual=" << dual_ok << " time=" << secs << "s";
}

void characterization_equivalence(Outcome& o) {
  std::mt19937_64 rng(5);
  std::size_t mismatches = 0;
  std::size_t hadamard = 0;
  for (std::size_t m : {3u, 7u, 11u}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const BitMatrix t = oracles::random_bit_matrix(m, rng);
      const bool zo = is_hadamard_zo(t);
      hadamard += zo;
      mismatches += verify_sign_hadamard(pm_from_zo(t)) != zo;
    }
  }
  o.require(mismatches == 0, "zero mismatches");
  o.detail << "trials=3000 mismatches=" << mismatches << " hadamard=" << hadamard;
}

void encoding_fidelity(Outcome& o) {
  const BitMatrix t = fixtures::matrix15();
  std::istringstream in(fixtures::matrix15_listing());
  const auto recs = io::read_grouplist(in);
  std::string listing;
  for (char c : fixtures::matrix15_listing())
    if (!std::isspace(static_cast<unsigned char>(c))) listing += c;
  const PartitionMatrix enc = encode_matrix(t);
  o.require(recs.size() == 1 && enc == recs[0].matrix, "encode_matrix equals the listing");
  o.require("H:" + io::group_lists_text(enc) + "$" == listing, "serialization is byte-exact");
  o.require(recs.size() == 1 && decode_matrix(recs[0].matrix) == t, "decode_matrix reproduces the matrix");
  const GramTarget target{15, 4, 8};
  o.require(matches_target(gram_rows(t), target), "gram_rows is diag 8 / off-diag 4");
  o.require(matches_target(gram_cols(t), target), "gram_cols is diag 8 / off-diag 4");
  o.detail << "rows=" << enc.rows.size() << " bytes=" << listing.size();
}

void solver_equivalence(Outcome& o) {
  std::size_t checked7 = 0;
  std::size_t bad7 = 0;
  GenConfig c7 = GenConfig::for_order(7);
  c7.system_observer = [&](const RowSystem& sys) {
    ++checked7;
    const auto sols = enumerate_solutions(sys);
    bad7 += std::set<std::vector<int>>(sols.begin(), sols.end()) != oracles::brute_force_solutions(sys) ||
            std::set<std::vector<int>>(sols.begin(), sols.end()).size() != sols.size();
  };
  generate(c7, [](const PartitionMatrix&) {});

  // Reservoir sample of the systems met in the full m = 11 run.
  constexpr std::size_t kSample = 200;
  std::vector<RowSystem> reservoir;
  std::mt19937_64 rng(1111);
  std::size_t seen = 0;
  GenConfig c11 = GenConfig::for_order(11);
  c11.verify_each = false;
  c11.system_observer = [&](const RowSystem& sys) {
    ++seen;
    if (reservoir.size() < kSample) {
      reservoir.push_back(sys);
    } else {
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, seen - 1)(rng);
      if (j < kSample) reservoir[j] = sys;
    }
  };
  generate(c11, [](const PartitionMatrix&) {});
  std::size_t bad11 = 0;
  for (const auto& sys : reservoir) {
    const auto sols = enumerate_solutions(sys);
    bad11 += std::set<std::vector<int>>(sols.begin(), sols.end()) != oracles::brute_force_solutions(sys);
  }
  o.require(checked7 > 0 && bad7 == 0, "every m=7 system matches brute force");
  o.require(reservoir.size() >= 100 && bad11 == 0, ">=100 sampled m=11 systems match brute force");
  o.detail << "m7 systems=" << checked7 << " mismatches=" << bad7 << "; m11 systems=" << seen
           << " sampled=" << reservoir.size() << " mismatches=" << bad11;
}

std::string run_generate_to_file(const cli::GenerateOptions& opt, const std::string& path) {
  {
    std::ofstream f(path);
    std::ostringstream diag;
    cli::cmd_generate(opt, f, diag);
  }
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  std::remove(path.c_str());
  return s.str();
}

void determinism(Outcome& o) {
  const std::string a = run_generate_to_file({.m = 7}, "acceptance_det_a.txt");
  const std::string b = run_generate_to_file({.m = 7}, "acceptance_det_b.txt");
  const std::string p = run_generate_to_file({.m = 7, .parallel = 4}, "acceptance_det_p.txt");
  auto records = [](const std::string& text) {
    std::istringstream in(text);
    std::multiset<PartitionMatrix> out;
    for (auto& r : io::read_grouplist(in)) out.insert(std::move(r.matrix));
    return out;
  };
  const auto serial = records(a);
  const auto parallel = records(p);
  o.require(!a.empty() && a == b, "sequential runs are byte-identical");
  o.require(serial == parallel, "parallel run yields the same multiset");
  o.detail << "bytes=" << a.size() << " serial=" << serial.size() << " parallel=" << parallel.size();
}

void bench_report(Outcome& o) {
  std::ostringstream report, diag;
  const int rc = cli::cmd_bench({.m = 11}, report, diag);
  const std::string text = report.str();
  std::smatch match;
  const bool has_rate = std::regex_search(text, match, std::regex(R"(v=(\d+) matrices/minute)"));
  o.require(rc == cli::kOk, "bench exits 0");
  o.require(has_rate, "reports v=<rate> matrices/minute");
  std::string first_line = text.substr(0, text.find('\n'));
  o.detail << first_line << "; " << (has_rate ? match[0].str() : "no rate");
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::map<int, Criterion>& criteria() {
  static const std::map<int, Criterion> all{
      {1, {"m=3 completeness", m3_completeness}},
      {2, {"m=7 count, soundness and oracle set equality", m7_count_and_soundness}},
      {3, {"m=11 count", m11_count}},
      {4, {"m=15 soundness at scale", m15_soundness}},
      {5, {"characterization equivalence", characterization_equivalence}},
      {6, {"encoding fidelity", encoding_fidelity}},
      {7, {"solver oracle equivalence", solver_equivalence}},
      {8, {"determinism", determinism}},
      {9, {"bench report", bench_report}},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (const auto& [id, c] : criteria()) selected.push_back(id);

  int failures = 0;
  for (int id : selected) {
    const auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    Outcome o;
    try {
      it->second.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures += std::string(" [exception: ") + e.what() + "]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << it->second.title << " -- "
              << o.detail.str() << o.failures << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
