#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cli_runner.hpp"
#include "ginv/campaign.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace ginv;
using namespace ginv::test;

TEST(MatrixJson, RoundTrip) {
  GMatrix g = gm({{"1/2", "-i"}, {"3+1/3i", "0"}});
  json doc = matrix_to_json(g);
  EXPECT_EQ(doc["ring"], "gaussian_rational");
  EXPECT_EQ(doc.dump(), R"({"ring":"gaussian_rational","rows":2,"cols":2,"entries":[["1/2","-i"],["3+1/3i","0"]]})");
  EXPECT_EQ(std::get<GMatrix>(parse_matrix_document(doc.dump())), g);
  DMatrix d = dm({{"1+(2)e", "(1/2i)e"}});
  EXPECT_EQ(std::get<DMatrix>(parse_matrix_document(matrix_to_json(d).dump())), d);
}

TEST(MatrixJson, Rejections) {
  EXPECT_THROW(parse_matrix_document("{"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"ring":"quaternion","rows":1,"cols":1,"entries":[["1"]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"ring":"gaussian_rational","rows":2,"cols":1,"entries":[["1"]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"ring":"gaussian_rational","rows":1,"cols":2,"entries":[["1"]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"ring":"gaussian_rational","rows":1,"cols":1,"entries":[[1]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"rows":1,"cols":1,"entries":[["1"]]})"), ParseError);
  EXPECT_THROW(matrix_from_json<DualGaussian>(matrix_to_json(GMatrix::identity(1))), ParseError);
}

TEST(Certificates, Json) {
  auto cert = verify(InverseKind::group, GMatrix{{1, 1}, {0, 0}}, GMatrix{{1, 1}, {0, 0}});
  EXPECT_EQ(certificate_to_json(cert).dump(),
            R"({"kind":"group","valid":true,"equations":[{"id":"1","holds":true},{"id":"2","holds":true},{"id":"commute","holds":true}]})");
}

TEST(Campaign, ClaimNames) {
  for (auto [claim, name] : claim_names) EXPECT_EQ(parse_claim(name), claim);
  EXPECT_FALSE(parse_claim("thm4_1"));
  EXPECT_EQ(claim_ring(Claim::radical_dual_core), "dual_gaussian");
}

TEST(Campaign, TrialsAreIndependentOfOrder) {
  CampaignConfig cfg;
  cfg.seed = 9;
  cfg.trials = 6;
  cfg.claim = Claim::core_sum;
  std::ostringstream all;
  run_campaign(cfg, &all);
  std::istringstream lines(all.str());
  std::string line;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    std::getline(lines, line);
    EXPECT_EQ(line, trial_to_json(run_trial(cfg, i)).dump());
  }
}

TEST(Campaign, EveryClaimRunsClean) {
  for (auto [claim, name] : claim_names) {
    CampaignConfig cfg;
    cfg.seed = 3;
    cfg.trials = 25;
    cfg.dim_lo = 1;
    cfg.dim_hi = 3;
    cfg.claim = claim;
    auto s = run_campaign(cfg);
    EXPECT_EQ(s.contract_violations, 0u) << name;
    EXPECT_EQ(s.exists_agrees + s.not_exists_agrees, 25u) << name;
  }
}

TEST(Campaign, InjectedFaultIsCaught) {
  for (auto [claim, name] : claim_names) {
    CampaignConfig cfg;
    cfg.seed = 4;
    cfg.trials = 3;
    cfg.claim = claim;
    cfg.fault_trial = 1;
    auto s = run_campaign(cfg);
    EXPECT_EQ(s.contract_violations, 1u) << name;
  }
}

TEST(Campaign, BadDimensions) {
  CampaignConfig cfg;
  cfg.dim_lo = 0;
  EXPECT_THROW(run_campaign(cfg), PreconditionViolated);
}

// --- hand-derived fixtures -------------------------------------------------------

TEST(Golden, DerivedCases) {
  auto results = golden::run_derived_cases(GINV_TEST_DIR "/golden/derived_cases.json");
  EXPECT_GE(results.size(), 30u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.message;
}

TEST(Cli, GoldenCases) {
  auto results = cli_test::run_cases(GINV_CLI, GINV_TEST_DIR "/golden/cli_cases.json", GINV_TEST_DIR "/fixtures");
  std::set<int> exits;
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.message;
    if (r.passed) exits.insert(r.exit_code);
  }
  EXPECT_EQ(exits, (std::set<int>{0, 2, 3, 4, 5}));
}

TEST(Cli, FuzzIsDeterministic) {
  std::vector<std::string> args{"fuzz", "--theorem", "thm2_1", "--trials", "40", "--seed", "1234", "--dims", "2..4"};
  auto a = cli_test::run(GINV_CLI, args);
  auto b = cli_test::run(GINV_CLI, args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  args[6] = "1235";
  EXPECT_NE(cli_test::run(GINV_CLI, args).out, a.out);
}
