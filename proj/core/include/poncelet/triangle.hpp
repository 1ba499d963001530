#pragma once

#include <optional>

#include "poncelet/conic.hpp"

namespace poncelet {

template <class S>
struct Triangle {
  Point<S> A, B, C;

  Line<S> side_a() const { return line_through(B, C, Tolerance{0.0}); }
  Line<S> side_b() const { return line_through(C, A, Tolerance{0.0}); }
  Line<S> side_c() const { return line_through(A, B, Tolerance{0.0}); }
};

/// Largest vertex coordinate: the reference length for comparisons between
/// derived points that may sit near the origin.
template <class S>
S extent(const Triangle<S>& t) {
  return smax<S>({t.A.x, t.A.y, t.B.x, t.B.y, t.C.x, t.C.y});
}

/// Coincidence of two derived points, measured against the triangle's extent.
template <class S>
bool coincide(const Triangle<S>& t, const Point<S>& p, const Point<S>& q, Tolerance tol = kDefaultTolerance) {
  return holds(point_defect(p, q, extent(t)), tol);
}

template <class S>
void require_nondegenerate(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  if (collinear(t.A, t.B, t.C, tol)) fail(ErrorCode::kDegenerateTriangle, "triangle vertices are collinear");
}

/// Euler data of a triangle.
template <class S>
struct EulerCenters {
  Point<S> G, O, H, N;
  S R2{0};
};

template <class S>
struct Incircle {
  Point<S> center;
  S r{0};
  Point<S> D, E, F;  // contact points on BC, CA, AB

  Circle<S> circle() const { return {center, S(r * r)}; }
};

template <class S>
struct ArcMidpoints {
  Point<S> A0, B0, C0;
};

/// Every center the theory touches. F_e and E are absent for equilateral
/// triangles, where the Euler line and the Feuerbach tangency degenerate.
template <class S>
struct CenterSet {
  Point<S> G, O, H, N, I, Na;
  std::optional<Point<S>> Fe;
  std::optional<Point<S>> E;
  S r{0};
  S R2{0};
};

template <class S>
EulerCenters<S> classic_centers(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  require_nondegenerate(t, tol);
  EulerCenters<S> out;
  out.G = centroid(t.A, t.B, t.C);
  out.O = circumcenter(t.A, t.B, t.C, tol);
  out.H = orthocenter(t.A, t.B, t.C, tol);
  Line<S> alt_c = perpendicular_through(t.C, t.side_c());
  if (!on_line(out.H, alt_c, tol)) fail(ErrorCode::kPostcondition, "third altitude misses the orthocenter");
  out.N = midpoint(out.O, out.H);
  out.R2 = dist2(out.O, t.A);
  return out;
}

template <class S>
Circle<S> circumcircle(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  return circle_through(t.A, t.B, t.C, tol);
}

template <class S>
Circle<S> nine_point_circle(const Point<S>& p, const Point<S>& q, const Point<S>& r,
                            Tolerance tol = kDefaultTolerance) {
  return circle_through(midpoint(p, q), midpoint(q, r), midpoint(r, p), tol);
}

template <class S>
std::array<S, 3> squared_sides(const Triangle<S>& t) {
  return {dist2(t.B, t.C), dist2(t.C, t.A), dist2(t.A, t.B)};
}

/// Incircle of a triangle. On the exact backend the side lengths must be
/// rational; otherwise the incenter leaves the field and IrrationalIncenter
/// is raised.
template <class S>
Incircle<S> incircle(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  require_nondegenerate(t, tol);
  auto sq = squared_sides(t);
  std::array<S, 3> len;
  for (int i = 0; i < 3; ++i) {
    auto root = exact_sqrt(sq[i]);
    if (!root) fail(ErrorCode::kIrrationalIncenter, "side length is irrational; use the float backend");
    len[i] = *root;
  }
  S perimeter = len[0] + len[1] + len[2];
  Incircle<S> out;
  out.center = (t.A * len[0] + t.B * len[1] + t.C * len[2]) / perimeter;
  out.r = sabs(orient(t.A, t.B, t.C)) / perimeter;
  out.D = perpendicular_foot(out.center, t.side_a());
  out.E = perpendicular_foot(out.center, t.side_b());
  out.F = perpendicular_foot(out.center, t.side_c());
  return out;
}

template <class S>
Point<S> incenter(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  return incircle(t, tol).center;
}

template <class S>
S inradius(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  return incircle(t, tol).r;
}

/// Second intersections of AI, BI, CI with the circumcircle. Each lands on
/// the arc opposite its vertex; this is asserted by the side of the sideline.
template <class S>
ArcMidpoints<S> arc_midpoints(const Triangle<S>& t, const Point<S>& I, Tolerance tol = kDefaultTolerance) {
  Circle<S> omega = circumcircle(t, tol);
  auto one = [&](const Point<S>& v, const Point<S>& p, const Point<S>& q) {
    Point<S> m = second_intersection(omega, line_through(v, I, tol), v, tol);
    S side_v = orient(p, q, v);
    S side_m = orient(p, q, m);
    if (!(side_v * side_m < 0)) fail(ErrorCode::kPostcondition, "arc midpoint on the wrong side of its sideline");
    return m;
  };
  return {one(t.A, t.B, t.C), one(t.B, t.C, t.A), one(t.C, t.A, t.B)};
}

/// Nagel point from the Nagel-line relation N_a = 3G - 2I.
template <class S>
Point<S> nagel_point(const Point<S>& I, const Point<S>& G) {
  return G * S(3) - I * S(2);
}

/// Feuerbach point: N + (I - N) * (R/2) / (R/2 - r), using |NI| = R/2 - r.
template <class S>
Point<S> feuerbach_point(const Point<S>& N, const Point<S>& I, const S& R2, const S& r,
                         Tolerance tol = kDefaultTolerance) {
  if (same_point(N, I, tol)) fail(ErrorCode::kEquilateralDegenerate, "incenter equals nine-point center");
  auto R = exact_sqrt(R2);
  if (!R) fail(ErrorCode::kIrrationalIncenter, "circumradius is irrational; use the float backend");
  S half = *R / 2;
  return N + (I - N) * S(half / (half - r));
}

/// Isogonal conjugate through barycentrics: (x : y : z) -> (a^2 yz : b^2 zx : c^2 xy).
/// Points on the circumcircle map to points at infinity.
template <class S>
HPoint<S> isogonal_conjugate(const Triangle<S>& t, const HPoint<S>& p, Tolerance tol = kDefaultTolerance) {
  auto lift = [](const Point<S>& v) { return HPoint<S>(v); };
  auto det3 = [](const HPoint<S>& u, const HPoint<S>& v, const HPoint<S>& w) {
    return S(u.X * (v.Y * w.W - v.W * w.Y) - u.Y * (v.X * w.W - v.W * w.X) + u.W * (v.X * w.Y - v.Y * w.X));
  };
  HPoint<S> A = lift(t.A), B = lift(t.B), C = lift(t.C);
  S x = det3(p, B, C);
  S y = det3(A, p, C);
  S z = det3(A, B, p);
  S area = det3(A, B, C);
  S scale = sabs(area) * smax<S>({p.X, p.Y, p.W});
  if (negligible(x, scale, tol) || negligible(y, scale, tol) || negligible(z, scale, tol)) {
    fail(ErrorCode::kOnSideline, "isogonal conjugate of a point on a sideline");
  }
  auto sq = squared_sides(t);
  S u = sq[0] * y * z;
  S v = sq[1] * z * x;
  S w = sq[2] * x * y;
  return {S(u * t.A.x + v * t.B.x + w * t.C.x), S(u * t.A.y + v * t.B.y + w * t.C.y), S(u + v + w)};
}

template <class S>
HPoint<S> isogonal_conjugate(const Triangle<S>& t, const Point<S>& p, Tolerance tol = kDefaultTolerance) {
  return isogonal_conjugate(t, HPoint<S>(p), tol);
}

/// Common point of the reflections of the Euler line in the three sidelines.
template <class S>
Point<S> euler_reflection_point(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  EulerCenters<S> ec = classic_centers(t, tol);
  if (coincide(t, ec.O, ec.H, tol)) fail(ErrorCode::kEquilateralDegenerate, "Euler line undefined");
  Line<S> euler = line_through(ec.O, ec.H, tol);
  std::array<Line<S>, 3> images{reflect(euler, t.side_a()), reflect(euler, t.side_b()), reflect(euler, t.side_c())};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (same_line(images[i], images[j], tol)) continue;
      HPoint<S> h = meet(images[i], images[j], tol);
      if (is_infinite(h, tol)) continue;
      Point<S> e = to_point(h, tol);
      int k = 3 - i - j;
      if (!on_line(e, images[k], tol)) fail(ErrorCode::kPostcondition, "third reflected Euler line misses the point");
      if (!on_circle(e, Circle<S>{ec.O, ec.R2}, tol)) {
        fail(ErrorCode::kPostcondition, "Euler reflection point off the circumcircle");
      }
      return e;
    }
  }
  fail(ErrorCode::kNoDistinctPair, "reflected Euler lines do not determine a point");
}

/// Full center set; requires a field-closed incenter.
template <class S>
CenterSet<S> triangle_centers(const Triangle<S>& t, Tolerance tol = kDefaultTolerance) {
  EulerCenters<S> ec = classic_centers(t, tol);
  Incircle<S> in = incircle(t, tol);
  CenterSet<S> cs;
  cs.G = ec.G;
  cs.O = ec.O;
  cs.H = ec.H;
  cs.N = ec.N;
  cs.R2 = ec.R2;
  cs.I = in.center;
  cs.r = in.r;
  cs.Na = nagel_point(cs.I, cs.G);
  if (!coincide(t, cs.N, cs.I, tol)) {
    cs.Fe = feuerbach_point(cs.N, cs.I, cs.R2, cs.r, tol);
    cs.E = euler_reflection_point(t, tol);
  }
  return cs;
}

/// Exact triangle inscribed in the unit circle whose incenter, inradius and
/// arc midpoints are all rational.
struct RationalTriangle {
  Triangle<Rational> triangle;
  CenterSet<Rational> centers;
  Incircle<Rational> incircle;
  ArcMidpoints<Rational> arcs;
  std::array<Rational, 3> params;
};

/// Vertex k sits at angle 4*atan(q_k) on the unit circle, i.e. at
/// (1 + i q)^4 / (1 + q^2)^2. The arc midpoint opposite A sits at the
/// half-sum angle, ((1 + i q_b)(1 + i q_c))^2 / ((1 + q_b^2)(1 + q_c^2)) or
/// its negative, whichever is across BC from A. I = A0 + B0 + C0.
/// Throws DegenerateParameters for repeated vertices or right triangles.
RationalTriangle rational_triangle(const Rational& qa, const Rational& qb, const Rational& qc);

/// Point at angle 4*atan(q) on the unit circle.
Point<Rational> unit_circle_point(const Rational& q);

}  // namespace poncelet
