#include "poncelet/triangle.hpp"

namespace poncelet {

Point<Rational> unit_circle_point(const Rational& q) {
  // (1 + iq)^2 = (1 - q^2) + 2q i, squared once more.
  Rational u = 1 - q * q;
  Rational v = 2 * q;
  Rational re = u * u - v * v;
  Rational im = 2 * u * v;
  Rational n = 1 + q * q;
  Rational den = n * n;
  return {Rational(re / den), Rational(im / den)};
}

namespace {

Point<Rational> half_sum_point(const Rational& p, const Rational& q) {
  Rational u = 1 - p * q;
  Rational v = p + q;
  Rational den = (1 + p * p) * (1 + q * q);
  return {Rational((u * u - v * v) / den), Rational(2 * u * v / den)};
}

Point<Rational> arc_midpoint(const Point<Rational>& opposite, const Point<Rational>& p, const Point<Rational>& q,
                             const Rational& qp, const Rational& qq) {
  Point<Rational> m = half_sum_point(qp, qq);
  if (orient(p, q, m) * orient(p, q, opposite) > 0) m = -m;
  return m;
}

}  // namespace

RationalTriangle rational_triangle(const Rational& qa, const Rational& qb, const Rational& qc) {
  Triangle<Rational> t{unit_circle_point(qa), unit_circle_point(qb), unit_circle_point(qc)};
  const std::array<Point<Rational>, 3> v{t.A, t.B, t.C};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (v[i] == v[j]) fail(ErrorCode::kDegenerateParameters, "parameters give a repeated vertex");
      if (v[i] == -v[j]) fail(ErrorCode::kDegenerateParameters, "antipodal vertices give a right triangle");
    }
  }

  RationalTriangle out;
  out.triangle = t;
  out.params = {qa, qb, qc};
  out.arcs = {arc_midpoint(t.A, t.B, t.C, qb, qc), arc_midpoint(t.B, t.C, t.A, qc, qa),
              arc_midpoint(t.C, t.A, t.B, qa, qb)};

  CenterSet<Rational>& cs = out.centers;
  cs.O = {0, 0};
  cs.R2 = 1;
  cs.H = t.A + t.B + t.C;
  cs.G = cs.H / Rational(3);
  cs.N = cs.H / Rational(2);
  cs.I = out.arcs.A0 + out.arcs.B0 + out.arcs.C0;
  // A0 is a unit normal of BC.
  cs.r = sabs(dot(cs.I - t.B, out.arcs.A0));
  cs.Na = nagel_point(cs.I, cs.G);
  if (cs.N != cs.I) {
    cs.Fe = feuerbach_point(cs.N, cs.I, cs.R2, cs.r);
    cs.E = euler_reflection_point(t);
  }

  out.incircle.center = cs.I;
  out.incircle.r = cs.r;
  out.incircle.D = perpendicular_foot(cs.I, t.side_a());
  out.incircle.E = perpendicular_foot(cs.I, t.side_b());
  out.incircle.F = perpendicular_foot(cs.I, t.side_c());
  return out;
}

}  // namespace poncelet
