#include <gtest/gtest.h>

#include "json.hpp"
#include "oracle.hpp"

using namespace poncelet;
using oracle::qp;

namespace {

std::size_t idx(const char* id) { return *find_check(id); }

Config<Rational> fix2() { return {{qp("0", "0"), qp("6", "0"), qp("1", "3")}, qp("3", "1"), "FIX2"}; }
Config<Rational> fix1() { return {{qp("0", "0"), qp("4", "0"), qp("0", "3")}, std::nullopt, "FIX1"}; }
Config<Rational> fix3() {
  return {{qp("1", "0"), qp("-7/25", "24/25"), qp("-7/25", "-24/25")}, std::nullopt, "FIX3"};
}

SuiteOptions options(Backend backend, std::uint64_t trials, unsigned jobs) {
  SuiteOptions o;
  for (std::size_t i = 0; i < check_registry().size(); ++i) o.checks.push_back(i);
  o.trials = trials;
  o.seed = 1;
  o.backend = backend;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST(Registry, HasTwentySixOrderedChecks) {
  auto reg = check_registry();
  ASSERT_EQ(reg.size(), 26u);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    char id[4];
    std::snprintf(id, sizeof id, "T%02zu", i + 1);
    EXPECT_EQ(reg[i].id, id);
    EXPECT_EQ(find_check(id), i);
  }
  EXPECT_FALSE(find_check("T27").has_value());
  EXPECT_FALSE(find_check("t01").has_value());
}

TEST(RunCheck, ScaleneFixtureCentroidCircle) {
  CheckResult r = run_check(idx("T09"), fix2());
  EXPECT_TRUE(r.passed) << r.error;
  EXPECT_EQ(r.residual, 0.0);
}

TEST(RunCheck, RightTriangleNagelPointIsCommonOrthocenter) {
  CheckResult r = run_check(idx("T12"), fix1());
  EXPECT_TRUE(r.passed) << r.error;
}

TEST(RunCheck, FeuerbachMidpointOnBothIncenterFixtures) {
  for (const auto& cfg : {fix1(), fix3()}) {
    CheckResult r = run_check(idx("T22"), cfg);
    EXPECT_TRUE(r.passed) << cfg.provenance << ": " << r.error;
  }
}

TEST(RunCheck, AllIncenterChecksPassOnUnitCircleFixture) {
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    if (!check_registry()[i].req.incenter) continue;
    CheckResult r = run_check(i, fix3());
    EXPECT_TRUE(r.passed) << check_registry()[i].id << ": " << r.error;
  }
}

TEST(RunCheck, ConicChecksRejectRightTriangle) {
  Config<Rational> cfg = fix1();
  cfg.P = qp("1", "2");
  try {
    run_check(idx("T05"), cfg);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGateViolation);
    EXPECT_NE(std::string(e.what()).find("right triangle"), std::string::npos);
  }
}

TEST(Sampler, SampledConfigsSatisfyTheirGate) {
  for (std::size_t check = 0; check < check_registry().size(); ++check) {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
      std::uint64_t stream = stream_seed(7, check, trial);
      auto ce = sample_config<Rational>(stream, check);
      EXPECT_FALSE(gate_violation(check, ce).has_value());
      auto cf = sample_config<double>(stream, check);
      EXPECT_FALSE(gate_violation(check, cf).has_value());
      EXPECT_GE(conditioning_margin(check, cf), SamplerOptions{}.conditioning);
    }
  }
}

TEST(Sampler, StreamsAreIndependentAndReproducible) {
  EXPECT_EQ(stream_seed(1, 3, 4), stream_seed(1, 3, 4));
  EXPECT_NE(stream_seed(1, 3, 4), stream_seed(1, 4, 3));
  EXPECT_NE(stream_seed(1, 3, 4), stream_seed(2, 3, 4));
  auto a = serialize_config(sample_config<Rational>(stream_seed(1, 0, 0), 0));
  auto b = serialize_config(sample_config<Rational>(stream_seed(1, 0, 0), 0));
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.P, b.P);
}

TEST(Suite, ReportIsIndependentOfThreadCount) {
  std::string one = serialize_report(verify_suite(options(Backend::kExact, 4, 1)));
  std::string three = serialize_report(verify_suite(options(Backend::kExact, 4, 3)));
  EXPECT_EQ(one, three);
  std::string f1 = serialize_report(verify_suite(options(Backend::kFloat, 30, 1)));
  std::string f4 = serialize_report(verify_suite(options(Backend::kFloat, 30, 4)));
  EXPECT_EQ(f1, f4);
}

TEST(Suite, ZeroTrialsAreVacuous) {
  Report r = verify_suite(options(Backend::kExact, 0, 1));
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.checks) EXPECT_TRUE(c.vacuous());
}

TEST(Suite, ReportSchema) {
  SuiteOptions o = options(Backend::kExact, 2, 1);
  o.checks = {idx("T09"), idx("T14")};
  Report r = verify_suite(o);
  auto j = nlohmann::json::parse(serialize_report(r));
  EXPECT_EQ(j["backend"], "exact");
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["trials"], 2);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["failure_count"], 0);
  EXPECT_FALSE(j.contains("elapsed_seconds"));
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][0]["id"], "T09");
  EXPECT_EQ(j["checks"][1]["passed"], 2);
  auto timed = nlohmann::json::parse(serialize_report(r, true));
  EXPECT_TRUE(timed.contains("elapsed_seconds"));
  EXPECT_TRUE(timed["checks"][0].contains("elapsed_seconds"));
}

TEST(Suite, SmallExactAndFloatRunsPass) {
  Report e = verify_suite(options(Backend::kExact, 5, 1));
  EXPECT_TRUE(e.ok());
  EXPECT_EQ(e.max_residual(), 0.0);
  Report f = verify_suite(options(Backend::kFloat, 200, 1));
  EXPECT_TRUE(f.ok());
  EXPECT_LT(f.max_residual(), 1e-7);
}
