#include "eisen/cli/cache.hpp"
#include "eisen/cli/report.hpp"
#include "eisen/cli/scan.hpp"

#include "test_util.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>

using namespace eisen;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("eisen_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

int exit_code(const std::string& args) {
  const std::string cmd = std::string(EISEN_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Genus, KnownValues) {
  const std::map<int64_t, int64_t> g{{2, 0}, {3, 0}, {5, 0}, {7, 0}, {11, 1}, {13, 0}, {17, 1}, {19, 1},
                                     {23, 2}, {29, 2}, {31, 2}, {37, 2}, {41, 3}, {43, 3}, {101, 8}};
  for (auto [N, genus] : g) EXPECT_EQ(genus_x0_prime(N), genus) << N;
}

TEST(Scan, JobEnumeration) {
  EXPECT_EQ(scan_jobs(31, PPolicy::All), (std::vector<ScanJob>{{11, 5}, {23, 11}, {29, 7}, {31, 5}}));
  EXPECT_TRUE(scan_jobs(10, PPolicy::All).empty());
  const auto big = scan_jobs(101, PPolicy::All);
  EXPECT_NE(std::find(big.begin(), big.end(), ScanJob{101, 5}), big.end());
  const auto all = scan_jobs(211, PPolicy::All), min = scan_jobs(211, PPolicy::Smallest);
  // 211 - 1 = 2 * 3 * 5 * 7.
  EXPECT_NE(std::find(all.begin(), all.end(), ScanJob{211, 7}), all.end());
  EXPECT_EQ(std::find(min.begin(), min.end(), ScanJob{211, 7}), min.end());
  EXPECT_NE(std::find(min.begin(), min.end(), ScanJob{211, 5}), min.end());
}

TEST(Scan, ParallelMatchesSerial) {
  const auto serial = scan(31, PPolicy::All, 1);
  const auto parallel = scan(31, PPolicy::All, 3);
  ASSERT_EQ(serial.size(), 4u);
  ASSERT_EQ(parallel.size(), 4u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    ASSERT_TRUE(serial[i].report.has_value());
    ASSERT_TRUE(parallel[i].report.has_value());
    EXPECT_EQ(serial[i].report->to_json().dump(), parallel[i].report->to_json().dump());
  }
}

TEST(Report, Level11Values) {
  const InvariantReport r = run_report(11, 5);
  EXPECT_EQ(r.q, 5);
  EXPECT_EQ(r.genus, 1);
  EXPECT_EQ(r.ad.a_tilde, 4);
  EXPECT_EQ(r.ad.d_tilde, 1);
  EXPECT_EQ(r.c.c_tilde, 1);
  EXPECT_EQ(r.b.b_tilde, 1);
  EXPECT_TRUE(r.b.assumes_annihilation_conjecture);
  for (const std::string& name : {"annihilation", "b_invariant"}) {
    ASSERT_NE(r.find(name), nullptr);
    EXPECT_EQ(r.find(name)->status, CheckStatus::Evidence) << name;
  }
  const nlohmann::json j = r.to_json();
  EXPECT_EQ(j["engine_version"], kEngineVersion);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["a_tilde"]["signed"], "-1");
  EXPECT_EQ(j["xi"], "5/6");
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_NE(r.to_markdown().find("| check | status | detail |"), std::string::npos);
}

TEST(Report, Deterministic) {
  EXPECT_EQ(run_report(23, 11).to_json().dump(), run_report(23, 11).to_json().dump());
}

TEST(Report, Errors) {
  EXPECT_EISEN_ERROR(run_report(11, 7), ErrorCode::PDoesNotDivide);
  EXPECT_EISEN_ERROR(run_check("no_such_check", 11, 5), ErrorCode::InvalidArgument);
  EXPECT_EISEN_ERROR(run_check("congruence", 101, 5), ErrorCode::InvalidArgument);
  EXPECT_EQ(run_check("structure", 29, 7).status, CheckStatus::Pass);
}

TEST(Cache, RoundTripPreservesReports) {
  const auto dir = fresh_dir("cache");
  ReportOptions opts;
  opts.cache_dir = dir;
  const std::string plain = run_report(29, 7).to_json().dump();
  const std::string cold = run_report(29, 7, opts).to_json().dump();
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".json");
  }
  EXPECT_EQ(files, 2u);
  const std::string warm = run_report(29, 7, opts).to_json().dump();
  EXPECT_EQ(plain, cold);
  EXPECT_EQ(plain, warm);
  std::filesystem::remove_all(dir);
}

TEST(Cache, EntryRoundTripIsExact) {
  const auto dir = fresh_dir("entry");
  const LevelContext ctx = build_context(31, 5);
  const EisLocalData e = eisenstein_ideal(ctx);
  const SpaceOptions& o = e.relative->options();
  const CacheEntry entry{kCacheSchema, cache_key(31, o), e.relative->data(), relative_operators(e)};
  save_cache(dir, entry);
  const auto back = load_cache(dir, entry.key);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->operators, entry.operators);
  const SymbolSpace S = SymbolSpace::from_data(ctx, back->data);
  EXPECT_EQ(S.basis(), e.relative->basis());
  EXPECT_EQ(S.boundary_matrix(), e.relative->boundary_matrix());
  EXPECT_EQ(S.generator_coordinates(), e.relative->generator_coordinates());
  EXPECT_EQ(S.fingerprint(), e.relative->fingerprint());
  EXPECT_FALSE(load_cache(dir, "another key").has_value());
  std::filesystem::remove_all(dir);
}

TEST(Cache, CorruptFilesAreReported) {
  const auto dir = fresh_dir("corrupt");
  std::filesystem::create_directories(dir);
  const std::string key = "k";
  std::ofstream(cache_path(dir, key)) << "{ not json";
  EXPECT_EISEN_ERROR(load_cache(dir, key), ErrorCode::CacheError);
  std::ofstream(cache_path(dir, key), std::ios::trunc) << R"({"schema": 99})";
  EXPECT_EISEN_ERROR(load_cache(dir, key), ErrorCode::CacheError);
  std::filesystem::remove_all(dir);
}

TEST(Cache, MatrixJsonUsesDecimalStrings) {
  IntMatrix m = IntMatrix::from_rows({{BigInt("123456789012345678901234567890"), -1}}, 2);
  const nlohmann::json j = matrix_to_json(m);
  EXPECT_TRUE(j["entries"][0].is_string());
  EXPECT_EQ(matrix_from_json(j), m);
  const IntMatrix r = IntMatrix::from_rows({{3, 4}}, 2, BigInt(5));
  EXPECT_EQ(matrix_from_json(matrix_to_json(r)), r);
}

TEST(Cli, ExitStatusTracksFailures) {
  const InvariantReport r = run_report(11, 5);
  EXPECT_EQ(exit_code("report --N 11 --p 5") == 0, !r.any_fail());
  EXPECT_EQ(exit_code("check structure --N 11 --p 5"), 0);
  EXPECT_EQ(exit_code("check winding_sign_corrected --N 11 --p 5"), 0);
  EXPECT_EQ(exit_code("check winding --N 11 --p 5") == 0, r.find("winding")->status != CheckStatus::Fail);
  EXPECT_NE(exit_code("report --N 11 --p 7"), 0);
  EXPECT_NE(exit_code("report --N 11"), 0);
}

TEST(Cli, WritesJsonAndMarkdown) {
  const auto dir = fresh_dir("out");
  std::filesystem::create_directories(dir);
  const auto json_path = dir / "r.json", md_path = dir / "r.md";
  exit_code("report --N 11 --p 5 --json " + json_path.string() + " --md " + md_path.string());
  std::ifstream in(json_path);
  const nlohmann::json j = nlohmann::json::parse(in);
  EXPECT_EQ(j, run_report(11, 5).to_json());
  EXPECT_TRUE(std::filesystem::exists(md_path));
  std::filesystem::remove_all(dir);
}
