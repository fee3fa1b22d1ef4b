#include "eisen/arith/errors.hpp"
#include "eisen/cli/report.hpp"
#include "eisen/cli/scan.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein ideal invariants at prime level"};
  app.require_subcommand(1);

  int64_t N = 0, p = 0;
  eisen::ReportOptions opts;
  std::string json_path, md_path, cache_dir;

  auto* report = app.add_subcommand("report", "Run the full check suite at one level");
  report->add_option("--N", N, "prime level")->required();
  report->add_option("--p", p, "prime p >= 5 dividing N - 1")->required();
  report->add_option("--slack", opts.slack, "work modulo q^slack")->capture_default_str();
  report->add_option("--witness-bound", opts.witness_bound, "largest Hecke prime used")->capture_default_str();
  report->add_option("--json", json_path, "write the JSON report here");
  report->add_option("--md", md_path, "write the markdown report here");
  report->add_option("--cache-dir", cache_dir, "reuse presentations stored here");

  int64_t max_n = 0;
  std::string policy = "all";
  unsigned jobs = 1;
  auto* scan = app.add_subcommand("scan", "Report on every admissible level up to a bound");
  scan->add_option("--max-N", max_n, "largest level")->required();
  scan->add_option("--p", policy, "all primes p or the smallest")->check(CLI::IsMember({"all", "min"}))->capture_default_str();
  scan->add_option("--jobs", jobs, "concurrent jobs")->capture_default_str();

  std::string check_name;
  auto* check = app.add_subcommand("check", "Run one named check");
  check->add_option("name", check_name, "check name")->required()->check(CLI::IsMember(eisen::check_names()));
  check->add_option("--N", N, "prime level")->required();
  check->add_option("--p", p, "prime p >= 5 dividing N - 1")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*report) {
      if (!cache_dir.empty()) opts.cache_dir = cache_dir;
      const eisen::InvariantReport r = eisen::run_report(N, p, opts);
      if (!json_path.empty()) write_file(json_path, r.to_json().dump(2) + "\n");
      if (!md_path.empty()) write_file(md_path, r.to_markdown());
      if (json_path.empty() && md_path.empty()) std::cout << r.to_markdown();
      for (const eisen::CheckResult& c : r.checks)
        if (c.status == eisen::CheckStatus::Fail) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
      return r.any_fail() ? 1 : 0;
    }
    if (*scan) {
      const auto results =
          eisen::scan(max_n, policy == "min" ? eisen::PPolicy::Smallest : eisen::PPolicy::All, jobs, opts);
      bool bad = false;
      for (const eisen::ScanResult& s : results) {
        std::cout << "N=" << s.job.N << " p=" << s.job.p << " ";
        if (!s.report) {
          std::cout << "ERROR " << s.error << "\n";
          bad = true;
          continue;
        }
        std::size_t fails = 0;
        for (const eisen::CheckResult& c : s.report->checks) fails += c.status == eisen::CheckStatus::Fail;
        bad |= fails > 0;
        std::cout << (fails ? "FAIL" : "PASS") << " (" << fails << " failing checks, " << s.report->seconds
                  << " s)\n";
      }
      std::cout << results.size() << " jobs\n";
      return bad ? 1 : 0;
    }
    const eisen::CheckResult c = eisen::run_check(check_name, N, p);
    std::cout << c.name << " " << eisen::status_name(c.status) << " " << c.detail << "\n";
    return c.status == eisen::CheckStatus::Fail ? 1 : 0;
  } catch (const eisen::Error& e) {
    std::cerr << "error [" << e.module() << "] " << eisen::error_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
