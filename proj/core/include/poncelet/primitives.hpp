#pragma once

#include <array>

#include "poncelet/error.hpp"
#include "poncelet/scalar.hpp"

namespace poncelet {

template <class S>
struct Point {
  S x{0};
  S y{0};

  friend Point operator+(const Point& a, const Point& b) { return {S(a.x + b.x), S(a.y + b.y)}; }
  friend Point operator-(const Point& a, const Point& b) { return {S(a.x - b.x), S(a.y - b.y)}; }
  friend Point operator-(const Point& a) { return {S(-a.x), S(-a.y)}; }
  friend Point operator*(const Point& a, const S& k) { return {S(a.x * k), S(a.y * k)}; }
  friend Point operator*(const S& k, const Point& a) { return {S(a.x * k), S(a.y * k)}; }
  friend Point operator/(const Point& a, const S& k) { return {S(a.x / k), S(a.y / k)}; }
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Homogeneous point (X : Y : W). W == 0 is the point at infinity in
/// direction (X, Y). Never normalized implicitly.
template <class S>
struct HPoint {
  S X{0};
  S Y{0};
  S W{1};

  HPoint() = default;
  HPoint(S x, S y, S w) : X(std::move(x)), Y(std::move(y)), W(std::move(w)) {}
  HPoint(const Point<S>& p) : X(p.x), Y(p.y), W(1) {}  // NOLINT: implicit lift is intended

  static HPoint at_infinity(const Point<S>& direction) { return {direction.x, direction.y, S(0)}; }
};

/// Line a*x + b*y + c = 0, defined up to scale.
template <class S>
struct Line {
  S a{0};
  S b{0};
  S c{0};

  S eval(const Point<S>& p) const { return S(a * p.x + b * p.y + c); }
  S eval(const HPoint<S>& p) const { return S(a * p.X + b * p.Y + c * p.W); }
  Point<S> normal() const { return {a, b}; }
  Point<S> direction() const { return {b, S(-a)}; }
};

template <class S>
struct Circle {
  Point<S> center;
  S r2{0};

  /// Point-circles arise for equilateral inputs where several constructions
  /// collapse by symmetry.
  bool is_point_circle() const { return r2 == 0; }
};

// ---------------------------------------------------------------------------
// Vector helpers.

template <class S>
S dot(const Point<S>& u, const Point<S>& v) {
  return S(u.x * v.x + u.y * v.y);
}

template <class S>
S cross(const Point<S>& u, const Point<S>& v) {
  return S(u.x * v.y - u.y * v.x);
}

template <class S>
S norm2(const Point<S>& u) {
  return dot(u, u);
}

template <class S>
S dist2(const Point<S>& p, const Point<S>& q) {
  return norm2(p - q);
}

template <class S>
Point<S> midpoint(const Point<S>& p, const Point<S>& q) {
  return {S((p.x + q.x) / 2), S((p.y + q.y) / 2)};
}

template <class S>
Point<S> centroid(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  return {S((p.x + q.x + r.x) / 3), S((p.y + q.y + r.y) / 3)};
}

template <class S>
S max_abs(const Point<S>& p) {
  return smax<S>({p.x, p.y});
}

/// Signed doubled area of triangle pqr.
template <class S>
S orient(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  return cross(q - p, r - p);
}

// ---------------------------------------------------------------------------
// Tolerance-aware equality. Exact backends compare exactly; floating backends
// compare the defect against eps times the magnitude of the inputs.

template <class S>
Defect<S> point_defect(const Point<S>& p, const Point<S>& q, const S& ref = S(0)) {
  return {smax<S>({S(p.x - q.x), S(p.y - q.y)}), smax<S>({p.x, p.y, q.x, q.y, ref})};
}

template <class S>
bool same_point(const Point<S>& p, const Point<S>& q, Tolerance tol = kDefaultTolerance) {
  return holds(point_defect(p, q), tol);
}

template <class S>
Defect<S> collinear_defect(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  Point<S> u = q - p;
  Point<S> v = r - p;
  return {cross(u, v), smax<S>({S(u.x * v.y), S(u.y * v.x)})};
}

template <class S>
bool collinear(const Point<S>& p, const Point<S>& q, const Point<S>& r,
               Tolerance tol = kDefaultTolerance) {
  return holds(collinear_defect(p, q, r), tol);
}

/// Proportionality of homogeneous triples: every 2x2 minor vanishes.
template <class S>
Defect<S> proportional_defect(const std::array<S, 3>& u, const std::array<S, 3>& v) {
  S worst(0);
  S scale(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      S lhs = u[i] * v[j];
      S rhs = u[j] * v[i];
      S d = sabs(S(lhs - rhs));
      if (worst < d) worst = d;
      scale = smax<S>({scale, lhs, rhs});
    }
  }
  // Compare against the product of the triples' magnitudes so that a minor
  // whose own monomials vanish still registers against the overall scale.
  S mu = smax<S>({u[0], u[1], u[2]});
  S mv = smax<S>({v[0], v[1], v[2]});
  S full = mu * mv;
  return {worst, smax(scale, full)};
}

template <class S>
bool same_line(const Line<S>& l1, const Line<S>& l2, Tolerance tol = kDefaultTolerance) {
  return holds(proportional_defect<S>({l1.a, l1.b, l1.c}, {l2.a, l2.b, l2.c}), tol);
}

template <class S>
bool same_hpoint(const HPoint<S>& p, const HPoint<S>& q, Tolerance tol = kDefaultTolerance) {
  return holds(proportional_defect<S>({p.X, p.Y, p.W}, {q.X, q.Y, q.W}), tol);
}

template <class S>
bool is_infinite(const HPoint<S>& p, Tolerance tol = kDefaultTolerance) {
  return negligible(p.W, smax<S>({p.X, p.Y}), tol);
}

/// Affine point of a finite homogeneous point; throws AtInfinity otherwise.
template <class S>
Point<S> to_point(const HPoint<S>& p, Tolerance tol = kDefaultTolerance) {
  if (p.W == 0 || is_infinite(p, tol)) fail(ErrorCode::kAtInfinity, "point at infinity has no affine coordinates");
  return {S(p.X / p.W), S(p.Y / p.W)};
}

template <class S>
Defect<S> on_line_defect(const Point<S>& p, const Line<S>& l) {
  return {l.eval(p), smax<S>({S(l.a * p.x), S(l.b * p.y), l.c})};
}

template <class S>
bool on_line(const Point<S>& p, const Line<S>& l, Tolerance tol = kDefaultTolerance) {
  return holds(on_line_defect(p, l), tol);
}

template <class S>
Defect<S> on_circle_defect(const Point<S>& p, const Circle<S>& c) {
  S d2 = dist2(p, c.center);
  return {S(d2 - c.r2), smax(d2, c.r2)};
}

template <class S>
bool on_circle(const Point<S>& p, const Circle<S>& c, Tolerance tol = kDefaultTolerance) {
  return holds(on_circle_defect(p, c), tol);
}

// ---------------------------------------------------------------------------
// Constructions.

template <class S>
Line<S> line_through(const Point<S>& p, const Point<S>& q, Tolerance tol = kDefaultTolerance) {
  if (p == q || same_point(p, q, tol)) fail(ErrorCode::kCoincidentPoints, "line through coincident points");
  return {S(p.y - q.y), S(q.x - p.x), S(p.x * q.y - q.x * p.y)};
}

/// Homogeneous intersection (cross product of the coefficient triples).
template <class S>
HPoint<S> meet(const Line<S>& l1, const Line<S>& l2, Tolerance tol = kDefaultTolerance) {
  if (same_line(l1, l2, tol)) fail(ErrorCode::kIdenticalLines, "meet of identical lines");
  return {S(l1.b * l2.c - l2.b * l1.c), S(l1.c * l2.a - l2.c * l1.a), S(l1.a * l2.b - l2.a * l1.b)};
}

/// Affine intersection of two non-parallel lines.
template <class S>
Point<S> intersect(const Line<S>& l1, const Line<S>& l2, Tolerance tol = kDefaultTolerance) {
  return to_point(meet(l1, l2, tol), tol);
}

template <class S>
Line<S> perpendicular_through(const Point<S>& p, const Line<S>& l) {
  return {l.b, S(-l.a), S(l.a * p.y - l.b * p.x)};
}

template <class S>
Line<S> parallel_through(const Point<S>& p, const Line<S>& l) {
  return {l.a, l.b, S(-(l.a * p.x + l.b * p.y))};
}

template <class S>
Point<S> perpendicular_foot(const Point<S>& p, const Line<S>& l) {
  S t = l.eval(p) / (l.a * l.a + l.b * l.b);
  return {S(p.x - t * l.a), S(p.y - t * l.b)};
}

/// Point reflection 2m - p.
template <class S>
Point<S> reflect(const Point<S>& p, const Point<S>& mirror) {
  return {S(2 * mirror.x - p.x), S(2 * mirror.y - p.y)};
}

/// Line reflection; stays in the field because only a^2 + b^2 is divided by.
template <class S>
Point<S> reflect(const Point<S>& p, const Line<S>& mirror) {
  S t = 2 * mirror.eval(p) / (mirror.a * mirror.a + mirror.b * mirror.b);
  return {S(p.x - t * mirror.a), S(p.y - t * mirror.b)};
}

template <class S>
Line<S> reflect(const Line<S>& l, const Line<S>& mirror) {
  S n2 = l.a * l.a + l.b * l.b;
  Point<S> on{S(-l.a * l.c / n2), S(-l.b * l.c / n2)};
  Point<S> p = reflect(on, mirror);
  Point<S> q = reflect(on + l.direction(), mirror);
  return line_through(p, q, Tolerance{0.0});
}

template <class S>
Point<S> circumcenter(const Point<S>& p, const Point<S>& q, const Point<S>& r,
                      Tolerance tol = kDefaultTolerance) {
  Point<S> b = q - p;
  Point<S> c = r - p;
  if (holds(collinear_defect(p, q, r), tol)) fail(ErrorCode::kCollinearPoints, "circle through collinear points");
  S d = 2 * cross(b, c);
  S bb = norm2(b);
  S cc = norm2(c);
  return {S(p.x + (c.y * bb - b.y * cc) / d), S(p.y + (b.x * cc - c.x * bb) / d)};
}

template <class S>
Circle<S> circle_through(const Point<S>& p, const Point<S>& q, const Point<S>& r,
                         Tolerance tol = kDefaultTolerance) {
  Point<S> center = circumcenter(p, q, r, tol);
  return {center, dist2(center, p)};
}

/// Orthocenter as the meet of the altitudes from p and q.
template <class S>
Point<S> orthocenter(const Point<S>& p, const Point<S>& q, const Point<S>& r,
                     Tolerance tol = kDefaultTolerance) {
  if (holds(collinear_defect(p, q, r), tol)) fail(ErrorCode::kCollinearPoints, "orthocenter of collinear points");
  Line<S> alt_p = perpendicular_through(p, line_through(q, r, tol));
  Line<S> alt_q = perpendicular_through(q, line_through(r, p, tol));
  return intersect(alt_p, alt_q, tol);
}

/// Outcome of a concyclicity test. Four collinear points count as concyclic
/// (a circle of infinite radius) and raise the `collinear` flag.
struct ConcyclicResult {
  bool concyclic = false;
  bool collinear = false;
  double residual = 0.0;
};

template <class S>
Defect<S> concyclic_defect(const Point<S>& p, const Point<S>& q, const Point<S>& r, const Point<S>& s) {
  // Translate to p; the 4x4 lifting determinant reduces to a 3x3 one.
  std::array<Point<S>, 3> d{q - p, r - p, s - p};
  std::array<S, 3> lift{norm2(d[0]), norm2(d[1]), norm2(d[2])};
  std::array<S, 6> terms{
      S(d[0].x * d[1].y * lift[2]), S(-d[0].x * d[2].y * lift[1]), S(-d[1].x * d[0].y * lift[2]),
      S(d[1].x * d[2].y * lift[0]), S(d[2].x * d[0].y * lift[1]),  S(-d[2].x * d[1].y * lift[0])};
  S det(0);
  S scale(0);
  for (const S& t : terms) {
    det += t;
    S a = sabs(t);
    if (scale < a) scale = a;
  }
  return {det, scale};
}

template <class S>
ConcyclicResult concyclic(const Point<S>& p, const Point<S>& q, const Point<S>& r, const Point<S>& s,
                          Tolerance tol = kDefaultTolerance) {
  Defect<S> d = concyclic_defect(p, q, r, s);
  ConcyclicResult out;
  out.concyclic = holds(d, tol);
  out.residual = normalized(d);
  out.collinear = collinear(p, q, r, tol) && collinear(p, q, s, tol);
  return out;
}

/// Cross ratio (a,b;c,d) = (ac)(bd) / ((bc)(ad)) of four collinear points,
/// any of which may be at infinity. Harmonic quadruples give -1.
template <class S>
S cross_ratio(const HPoint<S>& a, const HPoint<S>& b, const HPoint<S>& c, const HPoint<S>& d,
              Tolerance tol = kDefaultTolerance) {
  const std::array<const HPoint<S>*, 4> pts{&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (same_hpoint(*pts[i], *pts[j], tol)) fail(ErrorCode::kCoincidentPoints, "cross ratio of coincident points");
    }
  }
  // Carrier line through a and b (homogeneous cross product).
  std::array<S, 3> line{S(a.Y * b.W - a.W * b.Y), S(a.W * b.X - a.X * b.W), S(a.X * b.Y - a.Y * b.X)};
  if (line[0] == 0 && line[1] == 0) fail(ErrorCode::kNotCollinear, "cross ratio on the line at infinity");
  for (const HPoint<S>* p : {&c, &d}) {
    S v = line[0] * p->X + line[1] * p->Y + line[2] * p->W;
    S scale = smax<S>({S(line[0] * p->X), S(line[1] * p->Y), S(line[2] * p->W)});
    if (!negligible(v, scale, tol)) fail(ErrorCode::kNotCollinear, "cross ratio of non-collinear points");
  }
  // Project onto the axis with the larger direction component: the line's
  // direction is (b, -a), so use X when |b| >= |a|.
  bool use_x = !(sabs(line[1]) < sabs(line[0]));
  auto coord = [&](const HPoint<S>& p) { return use_x ? p.X : p.Y; };
  auto bracket = [&](const HPoint<S>& u, const HPoint<S>& v) {
    return S(coord(v) * u.W - coord(u) * v.W);
  };
  S num = bracket(a, c) * bracket(b, d);
  S den = bracket(b, c) * bracket(a, d);
  return S(num / den);
}

/// Inversion in a circle. The center maps to the point at infinity, whose
/// direction is undetermined and reported as (1 : 0 : 0).
template <class S>
HPoint<S> invert(const Circle<S>& c, const Point<S>& p) {
  Point<S> d = p - c.center;
  S n = norm2(d);
  if (n == 0) return {S(1), S(0), S(0)};
  S k = c.r2 / n;
  return HPoint<S>(c.center + d * k);
}

template <class S>
HPoint<S> invert(const Circle<S>& c, const HPoint<S>& p) {
  if (p.W == 0) return HPoint<S>(c.center);
  return invert(c, Point<S>{S(p.X / p.W), S(p.Y / p.W)});
}

template <class S>
Line<S> polar(const Circle<S>& c, const Point<S>& p) {
  Point<S> d = p - c.center;
  if (d.x == 0 && d.y == 0) fail(ErrorCode::kPointIsCenter, "polar of the circle center");
  return {d.x, d.y, S(-(d.x * c.center.x + d.y * c.center.y) - c.r2)};
}

/// Pole of a line. Lines through the center have their pole at infinity
/// (W == 0) in the direction of the line's normal.
template <class S>
HPoint<S> pole(const Circle<S>& c, const Line<S>& l) {
  S denom = l.a * c.center.x + l.b * c.center.y + l.c;
  return {S(c.center.x * denom - c.r2 * l.a), S(c.center.y * denom - c.r2 * l.b), denom};
}

/// Finite pole; throws LineThroughCenter when the pole is at infinity.
template <class S>
Point<S> pole_point(const Circle<S>& c, const Line<S>& l) {
  HPoint<S> h = pole(c, l);
  if (h.W == 0) fail(ErrorCode::kLineThroughCenter, "pole of a line through the center");
  return to_point(h, Tolerance{0.0});
}

/// The other intersection of `l` with circle `c`, eliminating the known root
/// so the result stays in the field. Tangency returns `known`.
template <class S>
Point<S> second_intersection(const Circle<S>& c, const Line<S>& l, const Point<S>& known,
                             Tolerance tol = kDefaultTolerance) {
  if (!on_circle(known, c, tol) || !on_line(known, l, tol)) {
    fail(ErrorCode::kKnownNotIncident, "known point is not on both circle and line");
  }
  Point<S> dir = l.direction();
  S t = -2 * dot(dir, known - c.center) / norm2(dir);
  return known + dir * t;
}

}  // namespace poncelet
