#pragma once

#include "eisen/etaunit/eta.hpp"
#include "eisen/sharifi/sharifi.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace eisen {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kReportSchema = 1;
inline constexpr const char* kHeilbronnFamily = "merel";

enum class CheckStatus { Pass, Fail, Evidence };
const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct ReportOptions {
  int64_t slack = 3;
  int64_t witness_bound = 50;
  std::optional<std::filesystem::path> cache_dir;
};

struct SpaceSummary {
  std::string id;
  std::size_t rank = 0;
  std::string fingerprint;
};

struct InvariantReport {
  int64_t N = 0, p = 0, q = 0;
  int f = 0;
  int64_t genus = 0;
  ReportOptions options;
  std::vector<SpaceSummary> spaces;
  BigInt order_h_i, order_i_i2, order_h_i2, order_h_ih;
  std::optional<int64_t> gorenstein_witness;
  AdResult ad;
  CInvariant c;
  BTranscript b;
  std::vector<CheckResult> checks;
  double seconds = 0;  // wall time; kept out of the JSON

  bool any_fail() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
  std::string to_markdown() const;
};

// Genus of X0(N) for prime N from the Riemann-Hurwitz count.
int64_t genus_x0_prime(int64_t N);

// Exact presentations of the two plus spaces on X0(N), through the cache when set.
EisLocalData load_or_build_eisenstein(const LevelContext& ctx, const EisOptions& eopts,
                                      const std::optional<std::filesystem::path>& cache_dir);

InvariantReport run_report(int64_t N, int64_t p, const ReportOptions& opts = {});

// Names accepted by run_check, in report order.
const std::vector<std::string>& check_names();
CheckResult run_check(const std::string& name, int64_t N, int64_t p, const ReportOptions& opts = {});

}  // namespace eisen
