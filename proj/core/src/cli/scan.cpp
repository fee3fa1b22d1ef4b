#include "eisen/cli/scan.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace eisen {

std::vector<ScanJob> scan_jobs(int64_t max_n, PPolicy policy) {
  std::vector<ScanJob> out;
  for (int64_t N : primes_up_to(max_n)) {
    for (const auto& [p, e] : factorize(N - 1)) {
      if (p < 5) continue;
      out.push_back({N, p});
      if (policy == PPolicy::Smallest) break;
    }
  }
  return out;
}

std::vector<ScanResult> scan(int64_t max_n, PPolicy policy, unsigned jobs, const ReportOptions& opts) {
  const std::vector<ScanJob> todo = scan_jobs(max_n, policy);
  std::vector<ScanResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      results[i].job = todo[i];
      try {
        results[i].report = run_report(todo[i].N, todo[i].p, opts);
      } catch (const Error& e) {
        results[i].error = std::string("[") + e.module() + "] " + error_name(e.code()) + ": " + e.what();
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace eisen
