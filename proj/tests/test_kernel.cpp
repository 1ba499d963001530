#include <gtest/gtest.h>

#include "oracle.hpp"
#include "poncelet/primitives.hpp"

using namespace poncelet;
using oracle::q;
using oracle::qp;
using QP = Point<Rational>;

TEST(Scalar, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("010/012"), Rational(5, 6));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-1.5e2"), Rational(-150));
  EXPECT_EQ(parse_rational("25e-2"), Rational(1, 4));
}

TEST(Scalar, RejectsMalformedNumbers) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.2.3", "--1", "1e"}) {
    try {
      parse_rational(bad);
      FAIL() << "accepted " << bad;
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(Scalar, FormatsCanonicalFractions) {
  EXPECT_EQ(format_scalar(q("6/-4")), "-3/2");
  EXPECT_EQ(format_scalar(Rational(5)), "5");
  EXPECT_EQ(format_scalar(0.1), "0.10000000000000001");
}

TEST(Scalar, ExactSqrtOnlyForPerfectSquares) {
  EXPECT_EQ(*exact_sqrt(Rational(49, 4)), Rational(7, 2));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-1)).has_value());
}

TEST(Scalar, DefectSemanticsPerBackend) {
  EXPECT_TRUE(holds(Defect<Rational>{Rational(0), Rational(5)}));
  EXPECT_FALSE(holds(Defect<Rational>{Rational(1, 1000000000), Rational(1000)}));
  EXPECT_TRUE(holds(Defect<double>{1e-10, 1.0}));
  EXPECT_FALSE(holds(Defect<double>{1e-8, 1.0}));
  EXPECT_DOUBLE_EQ(normalized(Defect<double>{2e-12, 4.0}), 5e-13);
}

TEST(Primitives, LineThroughFixturePoints) {
  Line<Rational> l = line_through(qp("4", "0"), qp("0", "3"));
  EXPECT_TRUE(same_line(l, Line<Rational>{q("3"), q("4"), q("-12")}));
}

TEST(Primitives, LineThroughCoincidentPointsThrows) {
  EXPECT_THROW(line_through(qp("1", "1"), qp("1", "1")), GeometryError);
}

TEST(Primitives, MeetOfParallelLinesIsAtInfinity) {
  HPoint<Rational> h = meet(Line<Rational>{q("1"), q("2"), q("3")}, Line<Rational>{q("2"), q("4"), q("1")});
  EXPECT_TRUE(is_infinite(h));
  EXPECT_THROW(to_point(h), GeometryError);
}

TEST(Primitives, CircumcenterMatchesCramerSolve) {
  QP a = qp("0", "0"), b = qp("6", "0"), c = qp("1", "3");
  EXPECT_EQ(circumcenter(a, b, c), oracle::circumcenter(a, b, c));
  EXPECT_EQ(circumcenter(a, b, c), qp("3", "2/3"));
  Circle<Rational> circ = circle_through(a, b, c);
  EXPECT_EQ(circ.r2, q("85/9"));
}

TEST(Primitives, OrthocenterMatchesEulerRelation) {
  QP a = qp("0", "0"), b = qp("6", "0"), c = qp("1", "3");
  EXPECT_EQ(orthocenter(a, b, c), oracle::orthocenter(a, b, c));
  EXPECT_EQ(orthocenter(a, b, c), qp("1", "5/3"));
}

TEST(Primitives, CollinearCircumcenterThrows) {
  try {
    circumcenter(qp("0", "0"), qp("1", "1"), qp("2", "2"));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCollinearPoints);
  }
}

TEST(Primitives, ReflectionsAreInvolutions) {
  Line<Rational> l = line_through(qp("1", "2"), qp("-3", "5/2"));
  QP p = qp("7/3", "-4");
  EXPECT_EQ(reflect(reflect(p, l), l), p);
  Line<Rational> m = line_through(qp("0", "0"), qp("2", "9"));
  EXPECT_TRUE(same_line(reflect(reflect(m, l), l), m));
}

TEST(Primitives, ConcyclicCentroidQuadruple) {
  std::array<QP, 4> pts{qp("7/3", "1"), qp("3/2", "7/2"), qp("2", "0"), qp("-1/6", "-3/2")};
  EXPECT_TRUE(concyclic(pts[0], pts[1], pts[2], pts[3]).concyclic);
  // Oracle: x^2 + y^2 + (7/6)x - (17/6)y - 19/3 = 0 on every point.
  for (const auto& p : pts) {
    EXPECT_EQ(p.x * p.x + p.y * p.y + q("7/6") * p.x - q("17/6") * p.y - q("19/3"), 0);
  }
  EXPECT_FALSE(concyclic(pts[0], pts[1], pts[2], qp("0", "0")).concyclic);
}

TEST(Primitives, HarmonicCrossRatio) {
  HPoint<Rational> a(qp("0", "0")), b(qp("4", "0")), c(qp("1", "0")), d(qp("-2", "0"));
  EXPECT_EQ(cross_ratio(a, b, c, d), -1);
  // Point at infinity: the midpoint is harmonic to it.
  HPoint<Rational> inf = HPoint<Rational>::at_infinity(qp("1", "1"));
  EXPECT_EQ(cross_ratio(HPoint<Rational>(qp("0", "0")), HPoint<Rational>(qp("2", "2")),
                        HPoint<Rational>(qp("1", "1")), inf),
            -1);
}

TEST(Primitives, CrossRatioRejectsNonCollinearAndRepeats) {
  HPoint<Rational> a(qp("0", "0")), b(qp("4", "0")), c(qp("1", "1")), d(qp("-2", "0"));
  EXPECT_THROW(cross_ratio(a, b, c, d), GeometryError);
  EXPECT_THROW(cross_ratio(a, a, c, d), GeometryError);
}

TEST(Primitives, InversionPolarAndPole) {
  Circle<Rational> unit{qp("0", "0"), q("1")};
  HPoint<Rational> inv = invert(unit, qp("2", "0"));
  EXPECT_EQ(to_point(inv), qp("1/2", "0"));
  EXPECT_TRUE(is_infinite(invert(unit, qp("0", "0"))));
  Line<Rational> pol = polar(unit, qp("2", "0"));
  EXPECT_TRUE(same_line(pol, Line<Rational>{q("2"), q("0"), q("-1")}));
  EXPECT_EQ(pole_point(unit, pol), qp("2", "0"));
  EXPECT_THROW(polar(unit, qp("0", "0")), GeometryError);
  EXPECT_THROW(pole_point(unit, Line<Rational>{q("1"), q("1"), q("0")}), GeometryError);
}

TEST(Primitives, SecondIntersectionWithCircle) {
  Circle<Rational> circ{qp("2", "3/2"), q("25/4")};
  Line<Rational> l = line_through(qp("0", "0"), qp("1", "1"));
  EXPECT_EQ(second_intersection(circ, l, qp("0", "0")), qp("7/2", "7/2"));
  EXPECT_THROW(second_intersection(circ, l, qp("1", "1")), GeometryError);
}
