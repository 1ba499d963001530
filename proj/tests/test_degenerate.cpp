#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace poncelet;
using oracle::qp;
using QP = Point<Rational>;

namespace {

std::size_t idx(const char* id) { return *find_check(id); }

std::string gate_error(std::size_t check, const Config<Rational>& cfg) {
  try {
    run_check(check, cfg);
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGateViolation);
    return e.what();
  }
  ADD_FAILURE() << "no gate violation";
  return {};
}

const Triangle<Rational> kScalene{qp("0", "0"), qp("6", "0"), qp("1", "3")};

}  // namespace

TEST(Degenerate, PointOnSidelineIsRejectedByEveryExplicitCheck) {
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    if (check_registry()[i].req.incenter) continue;
    std::string why = gate_error(i, {kScalene, qp("2", "0"), "sideline"});
    EXPECT_NE(why.find("P on a sideline"), std::string::npos) << check_registry()[i].id;
  }
  EXPECT_THROW(partial_orthocenters(kScalene.A, kScalene.B, kScalene.C, qp("7/2", "3/2")), GeometryError);
}

TEST(Degenerate, PEqualsHIsRejectedByConicChecks) {
  QP h = qp("1", "5/3");
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    const auto& info = check_registry()[i];
    if (info.req.incenter || !info.req.conic) continue;
    std::string why = gate_error(i, {kScalene, h, "P=H"});
    EXPECT_TRUE(why.find("P equals H") != std::string::npos || why.find("sub-triangle") != std::string::npos)
        << info.id << ": " << why;
  }
  try {
    rectangular_circumhyperbola(kScalene.A, kScalene.B, kScalene.C, h);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadP);
  }
}

TEST(Degenerate, RightTrianglesAreRoutedAwayFromConicChecks) {
  Triangle<Rational> right{qp("0", "0"), qp("4", "0"), qp("0", "3")};
  Config<Rational> cfg{right, qp("1", "2"), "right"};
  int conic_checks = 0;
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    const auto& info = check_registry()[i];
    if (info.req.incenter) continue;
    if (info.req.conic) {
      EXPECT_NE(gate_error(i, cfg).find("right triangle"), std::string::npos) << info.id;
      ++conic_checks;
    } else {
      // Checks without the conic requirement still run on right triangles.
      CheckResult r = run_check(i, cfg);
      EXPECT_TRUE(r.passed) << info.id << ": " << r.error;
    }
  }
  EXPECT_GE(conic_checks, 8);
  // Incenter checks have no conic requirement and run on the right triangle.
  CheckResult r = run_check(idx("T16"), Config<Rational>{right, std::nullopt, "right"});
  EXPECT_TRUE(r.passed) << r.error;
}

TEST(Degenerate, EquilateralTriangleFlagsPointCircles) {
  double s = std::sqrt(3.0) / 2;
  Triangle<double> t{{1, 0}, {-0.5, s}, {-0.5, -s}};
  CenterSet<double> cs = triangle_centers(t);
  EXPECT_TRUE(fuhrmann(t, cs).point_circle);
  EXPECT_TRUE(anti_fuhrmann(t, cs).point_circle);
  Config<double> cfg{t, std::nullopt, "equilateral"};
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    if (!check_registry()[i].req.incenter) continue;
    auto why = gate_violation(i, cfg);
    ASSERT_TRUE(why.has_value());
    EXPECT_EQ(*why, "equilateral triangle");
    EXPECT_THROW(run_check(i, cfg), GeometryError);
  }
}

TEST(Degenerate, CollinearQuadrupleOfCentroidsIsFlagged) {
  // FIX3 with P = I: G, GA, GB, GC are collinear (the concyclicity holds in
  // the degenerate sense) and the check reports it.
  Config<Rational> cfg{{qp("1", "0"), qp("-7/25", "24/25"), qp("-7/25", "-24/25")}, qp("1/5", "0"), "FIX3"};
  CheckResult r = run_check(idx("T09"), cfg);
  EXPECT_TRUE(r.passed) << r.error;
  EXPECT_EQ(r.flags, std::vector<std::string>{"collinear-quadruple"});
}

TEST(Degenerate, CollinearVerticesRejectedEverywhere) {
  Triangle<Rational> flat{qp("0", "0"), qp("1", "1"), qp("2", "2")};
  for (std::size_t i = 0; i < check_registry().size(); ++i) {
    EXPECT_EQ(gate_violation(i, Config<Rational>{flat, qp("5", "0"), "flat"}).value_or(""), "degenerate triangle");
  }
}
