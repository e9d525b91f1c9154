#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "dworkbench/config.hpp"
#include "dworkbench/error.hpp"
#include "dworkbench/harness.hpp"
#include "dworkbench/report.hpp"

using namespace dwb;

TEST_CASE("config parsing") {
  const CampaignConfig cfg = parse_config(
      "# campaign\n"
      "n = 2\n"
      "N=7\n"
      "q-list = 29, 43   # both primes\n"
      "checks = katz,validate-n3\n"
      "seed=17\n"
      "threads=2\n"
      "csv=true\n");
  CHECK(cfg.qs == std::vector<int64_t>{29, 43});
  CHECK(cfg.checks == std::vector<std::string>{"katz", "validate-n3"});
  CHECK(cfg.seed == 17);
  CHECK(cfg.threads == 2);
  CHECK(cfg.csv);
  validate_config(cfg);
  CHECK_THROWS_AS(parse_config("n=2\nbogus=1\n"), Error);
  try {
    parse_config("n=2\nN=seven\n");
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CampaignConfig bad = cfg;
  bad.qs = {31};  // 31 != 1 mod 7
  CHECK_THROWS_AS(validate_config(bad), Error);
  bad = cfg;
  bad.checks = {"nope"};
  CHECK_THROWS_AS(validate_config(bad), Error);
}

TEST_CASE("cyclotomic JSON round trip") {
  const CycloElem x = CycloElem::root_of_unity(21, 5).scaled(mpq_class(-3, 4)) + CycloElem::integer(21, 2);
  CHECK(cyclo_from_json(cyclo_to_json(x)) == x);
  CHECK(cyclo_from_json(json::parse(cyclo_to_json(x).dump())) == x);
}

TEST_CASE("report schema") {
  Report r = check_combinatorics();
  const json j = r.to_json();
  for (const char* key : {"check", "params", "pass", "adjudications", "rows", "runtime_ms", "seed"})
    CHECK(j.contains(key));
  CHECK(r.to_json(false)["runtime_ms"] == 0);
}

TEST_CASE("perturbed label leaves the orbit") {
  for (auto [n, N] : std::vector<std::pair<int, int>>{{2, 7}, {4, 9}}) {
    const auto v = build_v(n, N);
    const auto w = perturbed(v);
    CHECK(rank_of(w) == n);
    CHECK_FALSE(w.same_label(v));
  }
}

TEST_CASE("N = 3 validation and its negative control") {
  CHECK(validate_n3(7).pass);
  CHECK(validate_n3(13).pass);
  CHECK_FALSE(validate_n3(7, true).pass);
}

TEST_CASE("Katz comparison at n = 2, N = 7, q = 29") {
  const KatzReport k = katz_check(2, 7, 29);
  CHECK(k.pass);
  CHECK(k.main.constant_direct);
  CHECK(k.weight_ok);
  CHECK(k.lambda_integral);
  REQUIRE(k.lambda);
  CHECK(*k.lambda * k.lambda->conjugate() == CycloElem::integer(k.lambda->modulus(), 29 * 29 * 29 * 29));
  CHECK_FALSE(k.control.constant_direct);
  CHECK_FALSE(k.control.constant_conjugate);
  CHECK(psi2_weight_note(2, 7, 29, k.lambda).pass);
  CHECK_THROWS_AS(psi2_weight_note(2, 7, 29, std::nullopt), Error);
}

TEST_CASE("campaign subset writes reports") {
  CampaignConfig cfg;
  cfg.checks = {"validate-n3", "combinatorics"};
  cfg.out_dir = (std::filesystem::temp_directory_path() / "dworkbench_test_reports").string();
  cfg.csv = true;
  std::ostringstream log;
  CHECK(run_campaign(cfg, log) == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(cfg.out_dir) / "validate-n3.json"));
  CHECK(std::filesystem::exists(std::filesystem::path(cfg.out_dir) / "combinatorics.csv"));
  CHECK(log.str().find("PASS validate-n3") != std::string::npos);
  cfg.qs = {31};
  CHECK_THROWS_AS(run_campaign(cfg, log), Error);
}

TEST_CASE("reports do not depend on the worker count") {
  CampaignConfig cfg;
  cfg.qs = {29};
  CHECK(check_determinism(cfg).pass);
}
