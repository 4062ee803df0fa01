// Command-line front end: generate, verify, stats, baseline, bench.
//
// Exit codes: 0 success, 1 verification or I/O failure, 2 usage or format error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "superperm/analysis.hpp"
#include "superperm/baseline.hpp"
#include "superperm/generator.hpp"
#include "superperm/io.hpp"
#include "superperm/verifier.hpp"

namespace {

using nlohmann::json;
using namespace superperm;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Raised for bad arguments detected after parsing (format/n mismatches and the like).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json histogram_json(const std::map<std::size_t, BigInt>& histogram) {
  json out = json::object();
  for (const auto& [len, count] : histogram) out[std::to_string(len)] = count.str();
  return out;
}

json stats_json(std::size_t n, const GenerationStats& stats) {
  return json{
      {"n", n},
      {"mode", stats.mode == GenerationMode::stream ? "stream" : "palindrome"},
      {"length", stats.symbols_emitted.str()},
      {"mirror_shifts", stats.mirror_shift_count.str()},
      {"histogram", histogram_json(stats.intersection_histogram)},
      {"footprint",
       {{"bead_symbols", stats.footprint.bead_symbols},
        {"scratch_symbols", stats.footprint.scratch_symbols},
        {"buffered_symbols", stats.footprint.buffered_symbols},
        {"max_recursion_depth", stats.footprint.max_recursion_depth}}},
  };
}

json report_json(const VerificationReport& r) {
  json out{
      {"n", r.n},
      {"length", r.length},
      {"covered", r.covered},
      {"complete", r.complete},
      {"windows", r.windows},
      {"permutation_windows", r.permutation_windows},
  };
  out["is_palindrome"] = r.is_palindrome ? json(*r.is_palindrome) : json(nullptr);
  out["first_missing"] = r.first_missing ? json(r.first_missing->value) : json(nullptr);
  return out;
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << "n: " << r.n << "\n"
      << "length: " << r.length << "\n"
      << "covered: " << r.covered << "\n"
      << "complete: " << (r.complete ? "true" : "false") << "\n"
      << "windows: " << r.windows << "\n"
      << "permutation_windows: " << r.permutation_windows << "\n";
  if (r.is_palindrome) out << "is_palindrome: " << (*r.is_palindrome ? "true" : "false") << "\n";
  if (r.first_missing) {
    out << "first_missing_rank: " << r.first_missing->value;
    if (r.n <= kGlyphTable.size()) {
      const auto perm = unrank_permutation(*r.first_missing, r.n);
      out << " (" << Alphabet::standard(r.n).render(perm) << ")";
    }
    out << "\n";
  }
}

OutputFormat checked_format(const std::string& name, std::size_t n) {
  const auto format = parse_output_format(name).value();
  if (!format_supports(format, n)) {
    throw UsageError(name + " format cannot encode n = " + std::to_string(n) + " (plain supports up to " +
                     std::to_string(kGlyphTable.size()) + " symbols; use --format csv)");
  }
  return format;
}

/// Opens `path` for writing, or returns nullptr for stdout ("-" or empty).
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;
  auto file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

struct GenerateOptions {
  std::size_t n = 0;
  std::string output;
  std::string mode = "stream";
  std::string format = "plain";
  bool stats = false;
};

int cmd_generate(const GenerateOptions& opt) {
  const OutputFormat format = checked_format(opt.format, opt.n);
  const GenerationMode mode = opt.mode == "palindrome" ? GenerationMode::palindrome_buffer : GenerationMode::stream;
  if (mode == GenerationMode::palindrome_buffer && opt.n < 3) throw UsageError("--mode palindrome requires n >= 3");

  auto file = open_output(opt.output);
  std::ostream& out = file ? static_cast<std::ostream&>(*file) : std::cout;
  SequenceWriter writer(out, format, opt.n);
  const GenerationStats stats = generate(GeneratorConfig{opt.n, mode, opt.stats}, writer);
  writer.finish();

  if (opt.stats) {
    const std::string record = stats_json(opt.n, stats).dump() + "\n";
    if (file) {
      const std::string sidecar = opt.output + ".stats.json";
      std::ofstream side(sidecar, std::ios::trunc);
      side << record;
      if (!side.flush()) throw IoError("cannot write stats sidecar '" + sidecar + "'");
    } else {
      std::cerr << record;
    }
  }
  return kExitOk;
}

struct VerifyOptions {
  std::size_t n = 0;
  std::string input = "-";
  std::string format = "plain";
  bool check_palindrome = false;
  std::optional<std::uint64_t> expect_length;
  bool json = false;
};

int cmd_verify(const VerifyOptions& opt) {
  const OutputFormat format = checked_format(opt.format, opt.n);
  StreamingVerifier verifier(opt.n, VerifierOptions{opt.check_palindrome});

  std::ifstream file;
  if (opt.input != "-") {
    file.open(opt.input, std::ios::binary);
    if (!file) throw IoError("cannot open '" + opt.input + "' for reading");
  }
  std::istream& in = opt.input == "-" ? std::cin : file;
  read_sequence(in, format, opt.n, [&](std::span<const Symbol> chunk) { verifier.feed(chunk); });
  const VerificationReport report = verifier.finish();

  bool ok = report.complete;
  if (opt.expect_length && report.length != *opt.expect_length) ok = false;
  if (report.is_palindrome && !*report.is_palindrome) ok = false;

  if (opt.json) {
    json out = report_json(report);
    if (opt.expect_length) out["expected_length"] = *opt.expect_length;
    out["ok"] = ok;
    std::cout << out.dump() << "\n";
  } else {
    print_report(std::cout, report);
    if (opt.expect_length)
      std::cout << "expected_length: " << *opt.expect_length
                << (report.length == *opt.expect_length ? " (match)" : " (MISMATCH)") << "\n";
    std::cout << (ok ? "OK" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_stats(std::size_t n, bool as_json) {
  const LengthReport report = length_report(n);
  if (as_json) {
    const json out{
        {"n", n},
        {"length", report.length_closed_form.str()},
        {"length_sum_factorials", report.length_sum_factorials.str()},
        {"bead_count", report.bead_count.str()},
        {"operation_count", report.operation_count.str()},
        {"histogram", histogram_json(report.intersection_histogram)},
    };
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  std::cout << "n: " << n << "\n"
            << "length: " << report.length_closed_form << "\n"
            << "length_sum_factorials: " << report.length_sum_factorials << "\n"
            << "bead_count: " << report.bead_count << "\n"
            << "operation_count: " << report.operation_count << "\n";
  for (const auto& [len, count] : report.intersection_histogram)
    std::cout << "intersections[" << len << "]: " << count << "\n";
  return kExitOk;
}

int cmd_baseline(std::size_t n, const std::string& output, const std::string& format_name_arg) {
  const OutputFormat format = checked_format(format_name_arg, n);
  RecursiveBuild build = [&] {
    try {
      return recursive_superperm(n);
    } catch (const CapacityExceeded& e) {
      throw UsageError(e.what());
    }
  }();

  auto file = open_output(output);
  std::ostream& out = file ? static_cast<std::ostream&>(*file) : std::cout;
  SequenceWriter writer(out, format, n);
  writer.append(build.sequence);
  writer.finish();

  const VerificationReport report = verify(build.sequence, n);
  const bool ok = report.complete && BigInt(report.length) == length_sum_factorials(n);
  std::ostream& log = file ? std::cout : std::cerr;
  log << "baseline n=" << n << " length=" << report.length << " covered=" << report.covered
      << " complete=" << (report.complete ? "true" : "false") << (ok ? " OK" : " FAIL") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_bench(std::size_t n, std::size_t reps, bool as_json) {
  const BigInt expected = length_sum_factorials(n);
  double best = 0.0;
  double total = 0.0;
  std::uint64_t count = 0;
  std::uint64_t digest = 0;
  bool ok = true;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    CountingSink sink;
    const auto start = std::chrono::steady_clock::now();
    const GenerationStats stats = generate(GeneratorConfig{n}, sink);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    total += elapsed.count();
    best = rep == 0 ? elapsed.count() : std::min(best, elapsed.count());
    count = sink.count();
    digest = sink.digest();
    ok = ok && BigInt(count) == expected && stats.symbols_emitted == expected;
  }
  const double mean = total / static_cast<double>(reps);
  const double rate = best > 0.0 ? static_cast<double>(count) / best : 0.0;
  if (as_json) {
    std::cout << json{{"n", n},
                      {"reps", reps},
                      {"symbols", count},
                      {"expected", expected.str()},
                      {"ok", ok},
                      {"best_seconds", best},
                      {"mean_seconds", mean},
                      {"symbols_per_second", rate},
                      {"digest", digest}}
                     .dump()
              << "\n";
  } else {
    std::cout << "n: " << n << "\n"
              << "reps: " << reps << "\n"
              << "symbols: " << count << " (expected " << expected << ")\n"
              << "best_seconds: " << best << "\n"
              << "mean_seconds: " << mean << "\n"
              << "symbols_per_second: " << rate << "\n"
              << (ok ? "OK" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror-shift superpermutation generator, verifier and analytics"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Stream the superpermutation of n symbols");
  generate_cmd->add_option("--n", gen.n, "Alphabet size")->required()->check(CLI::Range(1, 255));
  generate_cmd->add_option("--output", gen.output, "Output path (default: stdout)");
  generate_cmd->add_option("--mode", gen.mode, "stream | palindrome")->check(CLI::IsMember({"stream", "palindrome"}));
  generate_cmd->add_option("--format", gen.format, "plain | csv")->check(CLI::IsMember({"plain", "csv"}));
  generate_cmd->add_flag("--stats", gen.stats, "Write a JSON stats record (stderr, or <output>.stats.json)");

  VerifyOptions ver;
  std::uint64_t expect_length = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a sequence contains every permutation");
  verify_cmd->add_option("--n", ver.n, "Alphabet size")->required()->check(CLI::Range(1, 255));
  verify_cmd->add_option("--input", ver.input, "Input path (default: stdin)");
  verify_cmd->add_option("--format", ver.format, "plain | csv")->check(CLI::IsMember({"plain", "csv"}));
  verify_cmd->add_flag("--check-palindrome", ver.check_palindrome, "Also require the sequence to be a palindrome");
  auto* expect_opt = verify_cmd->add_option("--expect-length", expect_length, "Required sequence length");
  verify_cmd->add_flag("--json", ver.json, "Print the report as JSON");

  std::size_t stats_n = 0;
  bool stats_json_flag = false;
  auto* stats_cmd = app.add_subcommand("stats", "Print exact length and intersection analytics");
  stats_cmd->add_option("--n", stats_n, "Alphabet size")->required()->check(CLI::Range(1, 10000));
  stats_cmd->add_flag("--json", stats_json_flag, "Print as JSON");

  std::size_t baseline_n = 0;
  std::string baseline_output;
  std::string baseline_format = "plain";
  auto* baseline_cmd = app.add_subcommand("baseline", "Build and verify the classical recursive construction");
  baseline_cmd->add_option("--n", baseline_n, "Alphabet size")->required()->check(CLI::Range(1, 255));
  baseline_cmd->add_option("--output", baseline_output, "Output path (default: stdout)");
  baseline_cmd->add_option("--format", baseline_format, "plain | csv")->check(CLI::IsMember({"plain", "csv"}));

  std::size_t bench_n = 0;
  std::size_t bench_reps = 1;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time stream-mode generation into a counting sink");
  bench_cmd->add_option("--n", bench_n, "Alphabet size")->required()->check(CLI::Range(1, 20));
  bench_cmd->add_option("--reps", bench_reps, "Repetitions")->check(CLI::Range(1, 1000000));
  bench_cmd->add_flag("--json", bench_json, "Print as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen);
    if (*verify_cmd) {
      if (*expect_opt) ver.expect_length = expect_length;
      return cmd_verify(ver);
    }
    if (*stats_cmd) return cmd_stats(stats_n, stats_json_flag);
    if (*baseline_cmd) return cmd_baseline(baseline_n, baseline_output, baseline_format);
    if (*bench_cmd) return cmd_bench(bench_n, bench_reps, bench_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
