#pragma once

#include <optional>

#include "poncelet/triangle.hpp"

namespace poncelet {

/// Orthocenters of BPC, CPA and PAB.
template <class S>
struct PartialOrthocenters {
  Point<S> HA, HB, HC;
};

/// P-dependent objects of the quadrangle ABCP. Z is the center of the
/// rectangular circumhyperbola through P; primed points are antipodes on it.
/// X is the common orthocenter of the triangles A HB HC, B HC HA, C HA HB and
/// Xp = 2Z - X the common point of their circumcircles.
template <class S>
struct QuadrangleDerived {
  Point<S> HA, HB, HC;
  Conic<S> conic;
  Point<S> H, Z, Hp, X, Xp, Pp;
  HPoint<S> Q;                  // isogonal conjugate of P
  HPoint<S> Qstar;              // inverse of Q in the circumcircle
  std::optional<Point<S>> M;    // midpoint of Q Q*, when both are finite
};

template <class S>
struct CentroidSet {
  Point<S> G, GA, GB, GC;  // centroids of ABC and A HB HC, B HC HA, C HA HB
  Point<S> Gp, Ga, Gb, Gc; // centroids of HA HB HC and HA B C, HB C A, HC A B
  Point<S> T;              // mean of A, B, C, HA, HB, HC
};

template <class S>
struct FuhrmannSet {
  Point<S> Oa, Ob, Oc;
  Point<S> Of;
  Circle<S> omega;
  bool point_circle = false;
};

template <class S>
struct AntiFuhrmannSet {
  Point<S> OA, OB, OC;
  Point<S> Or;
  Circle<S> omega;
  bool point_circle = false;
};

template <class S>
void require_off_sidelines(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                           Tolerance tol = kDefaultTolerance) {
  if (collinear(P, B, C, tol) || collinear(P, C, A, tol) || collinear(P, A, B, tol)) {
    fail(ErrorCode::kPOnSideline, "P lies on a sideline of ABC");
  }
}

template <class S>
PartialOrthocenters<S> partial_orthocenters(const Point<S>& A, const Point<S>& B, const Point<S>& C,
                                            const Point<S>& P, Tolerance tol = kDefaultTolerance) {
  if (collinear(A, B, C, tol)) fail(ErrorCode::kDegenerateTriangle, "triangle vertices are collinear");
  require_off_sidelines(A, B, C, P, tol);
  return {orthocenter(B, P, C, tol), orthocenter(C, P, A, tol), orthocenter(P, A, B, tol)};
}

/// Orthocenter of A HB HC; asserted to coincide with those of B HC HA and
/// C HA HB.
template <class S>
Point<S> common_orthocenter(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                            Tolerance tol = kDefaultTolerance) {
  auto h = partial_orthocenters(A, B, C, P, tol);
  auto ortho = [&](const Point<S>& u, const Point<S>& v, const Point<S>& w) {
    if (collinear(u, v, w, tol)) fail(ErrorCode::kDegenerateSubTriangle, "sub-triangle is degenerate");
    return orthocenter(u, v, w, tol);
  };
  Point<S> x = ortho(A, h.HB, h.HC);
  if (!same_point(x, ortho(B, h.HC, h.HA), tol) || !same_point(x, ortho(C, h.HA, h.HB), tol)) {
    fail(ErrorCode::kPostcondition, "sub-triangles do not share an orthocenter");
  }
  return x;
}

/// Builds every P-dependent object without asserting the theorems that
/// relate them; the check suite asserts those separately.
template <class S>
QuadrangleDerived<S> derive_quadrangle(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                                       Tolerance tol = kDefaultTolerance) {
  QuadrangleDerived<S> q;
  auto h = partial_orthocenters(A, B, C, P, tol);
  q.HA = h.HA;
  q.HB = h.HB;
  q.HC = h.HC;
  q.conic = rectangular_circumhyperbola(A, B, C, P, tol);
  q.H = orthocenter(A, B, C, tol);
  q.Z = conic_center_point(q.conic, tol);
  q.Hp = reflect(q.H, q.Z);
  if (collinear(A, q.HB, q.HC, tol)) fail(ErrorCode::kDegenerateSubTriangle, "triangle A HB HC is degenerate");
  q.X = orthocenter(A, q.HB, q.HC, tol);
  q.Xp = reflect(q.X, q.Z);
  q.Pp = reflect(P, q.Z);
  Triangle<S> t{A, B, C};
  q.Q = isogonal_conjugate(t, P, tol);
  Circle<S> omega = circumcircle(t, tol);
  q.Qstar = invert(omega, q.Q);
  if (!is_infinite(q.Q, tol) && !is_infinite(q.Qstar, tol)) {
    q.M = midpoint(to_point(q.Q, tol), to_point(q.Qstar, tol));
  }
  return q;
}

/// Common point of the circumcircles of A HB HC, B HC HA, C HA HB: the
/// antipode of the common orthocenter on the circumhyperbola.
template <class S>
Point<S> concurrence_point(const QuadrangleDerived<S>& q, const Point<S>& A, const Point<S>& B, const Point<S>& C,
                           Tolerance tol = kDefaultTolerance) {
  Point<S> xp = reflect(q.X, q.Z);
  for (const auto& c : {circle_through(A, q.HB, q.HC, tol), circle_through(B, q.HC, q.HA, tol),
                        circle_through(C, q.HA, q.HB, tol)}) {
    if (!on_circle(xp, c, tol)) fail(ErrorCode::kPostcondition, "concurrence point misses a circumcircle");
  }
  if (!on_conic(q.conic, xp, tol)) fail(ErrorCode::kPostcondition, "concurrence point off the circumhyperbola");
  return xp;
}

template <class S>
Point<S> concurrence_point(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                           Tolerance tol = kDefaultTolerance) {
  return concurrence_point(derive_quadrangle(A, B, C, P, tol), A, B, C, tol);
}

/// Isogonal conjugate of the midpoint of Q Q*, where Q is the isogonal
/// conjugate of P and Q* its inverse in the circumcircle. This is the point
/// the three circumcircles pass through; M itself generally is not on them.
template <class S>
Point<S> navneel_point(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                       Tolerance tol = kDefaultTolerance) {
  Triangle<S> t{A, B, C};
  require_nondegenerate(t, tol);
  require_off_sidelines(A, B, C, P, tol);
  EulerCenters<S> ec = classic_centers(t, tol);
  if (on_circle(P, Circle<S>{ec.O, ec.R2}, tol)) fail(ErrorCode::kPOnCircumcircle, "P lies on the circumcircle");
  QuadrangleDerived<S> q = derive_quadrangle(A, B, C, P, tol);
  if (!q.M) fail(ErrorCode::kAtInfinity, "midpoint of Q Q* is at infinity");
  Point<S> m_conj = to_point(isogonal_conjugate(t, *q.M, tol), tol);
  if (!same_point(m_conj, concurrence_point(q, A, B, C, tol), tol)) {
    fail(ErrorCode::kPostcondition, "conjugate of the QQ* midpoint differs from the concurrence point");
  }
  return m_conj;
}

template <class S>
CentroidSet<S> centroid_quadruples(const Point<S>& A, const Point<S>& B, const Point<S>& C,
                                   const PartialOrthocenters<S>& h) {
  CentroidSet<S> c;
  c.G = centroid(A, B, C);
  c.GA = centroid(A, h.HB, h.HC);
  c.GB = centroid(B, h.HC, h.HA);
  c.GC = centroid(C, h.HA, h.HB);
  c.Gp = centroid(h.HA, h.HB, h.HC);
  c.Ga = centroid(h.HA, B, C);
  c.Gb = centroid(h.HB, C, A);
  c.Gc = centroid(h.HC, A, B);
  c.T = (A + B + C + h.HA + h.HB + h.HC) / S(6);
  return c;
}

template <class S>
CentroidSet<S> centroid_quadruples(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                                   Tolerance tol = kDefaultTolerance) {
  return centroid_quadruples(A, B, C, partial_orthocenters(A, B, C, P, tol));
}

namespace detail {

template <class S>
Circle<S> circle_or_point(const Triangle<S>& t, const Point<S>& p, const Point<S>& q, const Point<S>& r,
                          bool& point_circle, Tolerance tol) {
  if (coincide(t, p, q, tol) && coincide(t, q, r, tol)) {
    point_circle = true;
    return {p, S(0)};
  }
  point_circle = false;
  return circle_through(p, q, r, tol);
}

}  // namespace detail

/// Fuhrmann triangle: circumcenters of HA B C, HB C A, HC A B for P = I.
/// Each vertex is asserted to equal the reflection of the matching arc
/// midpoint in its sideline.
template <class S>
FuhrmannSet<S> fuhrmann(const Triangle<S>& t, const CenterSet<S>& cs, Tolerance tol = kDefaultTolerance) {
  auto h = partial_orthocenters(t.A, t.B, t.C, cs.I, tol);
  FuhrmannSet<S> f;
  f.Oa = circumcenter(h.HA, t.B, t.C, tol);
  f.Ob = circumcenter(h.HB, t.C, t.A, tol);
  f.Oc = circumcenter(h.HC, t.A, t.B, tol);
  ArcMidpoints<S> arcs = arc_midpoints(t, cs.I, tol);
  if (!coincide(t, f.Oa, reflect(arcs.A0, t.side_a()), tol) || !coincide(t, f.Ob, reflect(arcs.B0, t.side_b()), tol) ||
      !coincide(t, f.Oc, reflect(arcs.C0, t.side_c()), tol)) {
    fail(ErrorCode::kPostcondition, "Fuhrmann vertex differs from the reflected arc midpoint");
  }
  f.omega = detail::circle_or_point(t, f.Oa, f.Ob, f.Oc, f.point_circle, tol);
  f.Of = f.omega.center;
  return f;
}

/// Anti-Fuhrmann triangle: circumcenters of A HB HC, B HC HA, C HA HB for
/// P = I. Each vertex is asserted to be the reflection of the matching
/// Fuhrmann vertex in the midpoint of HI.
template <class S>
AntiFuhrmannSet<S> anti_fuhrmann(const Triangle<S>& t, const CenterSet<S>& cs, Tolerance tol = kDefaultTolerance) {
  auto h = partial_orthocenters(t.A, t.B, t.C, cs.I, tol);
  AntiFuhrmannSet<S> r;
  r.OA = circumcenter(t.A, h.HB, h.HC, tol);
  r.OB = circumcenter(t.B, h.HC, h.HA, tol);
  r.OC = circumcenter(t.C, h.HA, h.HB, tol);
  FuhrmannSet<S> f = fuhrmann(t, cs, tol);
  Point<S> hi = cs.H + cs.I;
  if (!coincide(t, r.OA, hi - f.Oa, tol) || !coincide(t, r.OB, hi - f.Ob, tol) || !coincide(t, r.OC, hi - f.Oc, tol)) {
    fail(ErrorCode::kPostcondition, "anti-Fuhrmann vertex is not the reflection of its Fuhrmann vertex");
  }
  r.omega = detail::circle_or_point(t, r.OA, r.OB, r.OC, r.point_circle, tol);
  r.Or = r.omega.center;
  return r;
}

}  // namespace poncelet
