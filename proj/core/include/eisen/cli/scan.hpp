#pragma once

#include "eisen/cli/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisen {

enum class PPolicy { All, Smallest };

struct ScanJob {
  int64_t N = 0, p = 0;
  bool operator==(const ScanJob&) const = default;
};

struct ScanResult {
  ScanJob job;
  std::optional<InvariantReport> report;
  std::string error;  // set when the job raised instead of reporting
};

// Primes N <= max_n with a prime p >= 5 dividing N - 1, ordered by (N, p).
std::vector<ScanJob> scan_jobs(int64_t max_n, PPolicy policy);

// Runs every job, `jobs` at a time; one job's error does not stop the others.
std::vector<ScanResult> scan(int64_t max_n, PPolicy policy, unsigned jobs = 1, const ReportOptions& opts = {});

}  // namespace eisen
