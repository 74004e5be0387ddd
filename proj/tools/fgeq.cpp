#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fgeq/harness.hpp"
#include "fgeq/simd.hpp"

using namespace fgeq;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kInvariant = 1, kInput = 2;

const char* status_name(EquationKind k) {
  switch (k) {
    case EquationKind::trivially_true: return "trivially-true";
    case EquationKind::trivially_false: return "trivially-false";
    default: return "solved";
  }
}

json to_json(const SolutionSet& s) {
  json j;
  j["status"] = status_name(s.kind);
  j["finite"] = json::array();
  for (const Word& w : s.finite) j["finite"].push_back(to_string(w));
  j["families"] = json::array();
  for (const Family& f : s.families)
    j["families"].push_back({{"alpha", to_string(f.alpha)}, {"w", to_string(f.w)}, {"beta", to_string(f.beta)}});
  const SolveStats& st = s.stats;
  j["stats"] = {{"n", st.n},
                {"m", st.m},
                {"families_considered", st.families_considered},
                {"candidates_tested", st.candidates_tested},
                {"elapsed", st.elapsed_ms / 1000.0},
                {"diag_checks", st.diag_checks},
                {"diag_violations", st.diag_violations}};
  if (!s.diagnostics.empty()) j["diagnostics"] = s.diagnostics;
  return j;
}

std::string word_text(const Word& w) { return w.empty() ? "1" : to_string(w); }

void print_text(std::ostream& os, const std::string& line, const SolutionSet& s) {
  os << line << "\n  status: " << status_name(s.kind) << "\n";
  for (const Word& w : s.finite) os << "  x = " << word_text(w) << "\n";
  for (const Family& f : s.families)
    os << "  x = " << word_text(f.alpha) << " (" << to_string(f.w) << ")^k " << word_text(f.beta) << "\n";
  if (s.finite.empty() && s.families.empty() && !s.all_words()) os << "  no solutions\n";
  if (s.all_words()) os << "  every word is a solution\n";
  for (const std::string& d : s.diagnostics) os << "  diagnostic: " << d << "\n";
}

long env_slack(long fallback) {
  const char* v = std::getenv("FGEQ_SLACK");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long s = std::strtol(v, &end, 10);
  if (*end != '\0' || s < 1) throw std::invalid_argument(std::string("bad FGEQ_SLACK value: ") + v);
  return s;
}

int cmd_solve(const std::string& path, const std::string& format, long slack, long verify_k) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "cannot open " << path << "\n";
      return kInput;
    }
    in = &file;
  }
  SolveConfig cfg;
  cfg.slack = env_slack(slack);
  cfg.verify_k = verify_k;
  std::string line;
  int code = kOk;
  for (std::size_t no = 1; std::getline(*in, line); ++no) {
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    NormalizedEquation eq;
    try {
      eq = read_equation(body);
    } catch (const std::exception& e) {
      std::cerr << "line " << no << ": " << e.what() << "\n";
      code = kInput;
      continue;
    }
    SolutionSet s = solve(eq, cfg);
    if (format == "json")
      std::cout << to_json(s).dump() << "\n";
    else
      print_text(std::cout, line, s);
  }
  return code;
}

int cmd_fuzz(const harness::FuzzConfig& cfg, const std::string& dump, bool quiet) {
  harness::FuzzSummary sum = harness::run_fuzz(cfg);
  std::ofstream dump_file;
  if (!dump.empty()) dump_file.open(dump);
  std::ostream& fail_out = dump.empty() ? std::cerr : dump_file;
  for (const harness::FuzzItem& it : sum.items) {
    if (it.passed()) continue;
    fail_out << format_equation(it.eq) << "\n";
    if (quiet) continue;
    std::cerr << "# failure: " << format_equation(it.eq);
    if (!it.error.empty()) std::cerr << " error=" << it.error;
    for (const Word& x : it.report.missing) std::cerr << " missing=" << word_text(x);
    for (const Word& x : it.report.spurious) std::cerr << " spurious=" << word_text(x);
    for (const std::string& d : it.diagnostics) std::cerr << " diagnostic=\"" << d << "\"";
    std::cerr << "\n";
  }
  json j = {{"count", cfg.count},
            {"seed", cfg.seed},
            {"failures", sum.failures},
            {"missing", sum.missing},
            {"spurious", sum.spurious},
            {"errors", sum.errors},
            {"diag_checks", sum.diag_checks},
            {"diag_violations", sum.diag_violations},
            {"max_output_ratio", sum.max_output_ratio},
            {"max_family_ratio", sum.max_family_ratio},
            {"elapsed", sum.elapsed_s}};
  std::cout << j.dump() << "\n";
  if (sum.errors) return kInvariant;
  return sum.failures ? kInvariant : kOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::size_t m, std::uint64_t seed, bool as_json) {
  auto rows = harness::run_bench(sizes, reps, m, seed);
  double slope = harness::loglog_slope(rows);
  if (as_json) {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back({{"n", r.n}, {"median_ms", r.median_ms}, {"families", r.families}});
    j["slope"] = slope;
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "      n    median_ms  families\n";
  for (const auto& r : rows) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os.width(7);
    os << r.n << "  ";
    os.width(11);
    os << r.median_ms << "  ";
    os.width(8);
    os << r.families;
    std::cout << os.str() << "\n";
  }
  std::cout << "log-log slope: " << slope << "\n";
  return kOk;
}

int cmd_selftest(std::size_t scale) {
  bool ok = true;
  for (const props::Check& c : harness::selftest(scale)) {
    std::cout << (c.ok() ? "ok   " : "FAIL ") << c.name << " (" << c.trials << " trials, " << c.failures << " failures)";
    if (!c.ok() && !c.first_failure.empty()) std::cout << " first: " << c.first_failure;
    std::cout << "\n";
    ok = ok && c.ok();
  }
  std::cout << "simd: " << simd::isa_name(simd::active_isa()) << "\n";
  return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for one-variable equations in free groups"};
  app.require_subcommand(1);

  std::string path, format = "text";
  long slack = 16, verify_k = 8;
  auto* solve_cmd = app.add_subcommand("solve", "Solve equations, one per line");
  solve_cmd->add_option("file", path, "Input file (default stdin)");
  solve_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  solve_cmd->add_option("--slack", slack, "Candidate threshold B")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--verify-k", verify_k, "Family members sampled per family")->check(CLI::NonNegativeNumber);

  harness::FuzzConfig fc;
  std::string dump;
  bool quiet = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential test against exhaustive search");
  fuzz_cmd->add_option("--count", fc.count);
  fuzz_cmd->add_option("--seed", fc.seed);
  fuzz_cmd->add_option("--sigma", fc.sigma)->check(CLI::Range(1u, 26u));
  fuzz_cmd->add_option("--max-m", fc.max_m)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-word-len", fc.max_word_len);
  fuzz_cmd->add_option("--oracle-len", fc.oracle_len);
  fuzz_cmd->add_option("--verify-k", fc.verify_k);
  fuzz_cmd->add_option("--slack", fc.slack)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--threads", fc.threads);
  fuzz_cmd->add_option("--dump", dump, "Write failing equations here instead of stderr");
  fuzz_cmd->add_flag("--quiet", quiet, "Only dump the failing equations");

  std::vector<std::size_t> sizes{100, 200, 400, 800};
  std::size_t reps = 3, m = 6;
  std::uint64_t bench_seed = 1;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time synthetic equations of growing size");
  bench_cmd->add_option("--sizes", sizes)->delimiter(',');
  bench_cmd->add_option("--reps", reps);
  bench_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_flag("--json", bench_json);

  std::size_t scale = 1;
  auto* self_cmd = app.add_subcommand("selftest", "Run the property suites at reduced scale");
  self_cmd->add_option("--scale", scale)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    fc.slack = env_slack(fc.slack);
    if (*solve_cmd) return cmd_solve(path, format, slack, verify_k);
    if (*fuzz_cmd) return cmd_fuzz(fc, dump, quiet);
    if (*bench_cmd) return cmd_bench(sizes, reps, m, bench_seed, bench_json);
    if (*self_cmd) return cmd_selftest(scale);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
