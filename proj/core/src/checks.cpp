#include <chrono>
#include <cmath>
#include <functional>

#include "poncelet/suite.hpp"

namespace poncelet {

namespace {

constexpr Requirements kConic{.conic = true};
constexpr Requirements kConicSub{.conic = true, .subtriangles = true};
constexpr Requirements kIncenter{.incenter = true};

constexpr std::array<CheckInfo, 26> kChecks{{
    {"T01", "a circumconic is a rectangular hyperbola exactly when it passes through the orthocenter", kConic},
    {"T02", "on a rectangular hyperbola through A, B, C the perpendicular from A to BC meets it again at the orthocenter",
     kConic},
    {"T03", "the antipode H' of H on the circumhyperbola lies on the circumcircle", kConic},
    {"T04", "A HB HC, B HC HA and C HA HB share an orthocenter X", {.subtriangles = true}},
    {"T05", "the circumcircles of A HB HC, B HC HA, C HA HB concur at the antipode X' of X on the circumhyperbola",
     kConicSub},
    {"T06", "X' is the isogonal conjugate of the midpoint M of QQ* and (Q, Q*; M, Q_inf) = -1",
     {.conic = true, .subtriangles = true, .off_circumcircle = true, .navneel = true}},
    {"T07", "HX' is parallel to PP' and HX is parallel to the tangent at P", kConicSub},
    {"T08", "ABC and HA HB HC are orthologic with both orthology centers on the circumhyperbola", kConicSub},
    {"T09", "G, GA, GB, GC are concyclic", {}},
    {"T10", "G GA is perpendicular to AP, G GB to BP and G GC to CP", {}},
    {"T11", "for P = I, A0 is the circumcenter of BIC and Oa is the reflection of A0 in BC", kIncenter},
    {"T12", "for P = I the common orthocenter X is the Nagel point", kIncenter},
    {"T13", "the polar of the midpoint of BC in the incircle is the line HB HC", kIncenter},
    {"T14", "the orthocenter H lies on the Fuhrmann circle", kIncenter},
    {"T15", "the Fuhrmann center is the reflection of I in the nine-point center", kIncenter},
    {"T16", "the Nagel point is the antipode of H on the Fuhrmann circle", kIncenter},
    {"T17", "the orthocenter of the Fuhrmann triangle is I", kIncenter},
    {"T18", "the Euler reflection point of the Fuhrmann triangle is H", kIncenter},
    {"T19", "the anti-Fuhrmann triangle is the reflection of the Fuhrmann triangle in the midpoint of HI", kIncenter},
    {"T20", "H and I are the orthocenter and Euler reflection point of the anti-Fuhrmann triangle", kIncenter},
    {"T21", "the anti-Fuhrmann center is the reflection of O in I and I lies on the anti-Fuhrmann circle", kIncenter},
    {"T22", "X' lies on the line Or H and the Feuerbach point is the midpoint of Na X'", kIncenter},
    {"T23", "the reflections of the anti-Fuhrmann Euler line in its sidelines are HA I, HB I, HC I", kIncenter},
    {"T24", "the isogonal image of line OQ lies on the circumhyperbola; (P', Q*) and (H', Q_inf) are conjugate pairs",
     {.conic = true, .subtriangles = true, .off_circumcircle = true, .isogonal_line = true}},
    {"T25", "G GA GB GC and G' Ga Gb Gc are reflections in the centroid T of A, B, C, HA, HB, HC", {}},
    {"T26", "the center Z of the circumhyperbola lies on the nine-point circles of ABC, BPC, CPA, PAB", kConic},
}};

/// Collects scale-normalized defects of one check's sub-assertions.
template <class S>
class Assertions {
 public:
  Assertions(S ref, Tolerance tol) : ref_(std::move(ref)), tol_(tol) {}

  void defect(const Defect<S>& d) {
    if (!holds(d, tol_)) ok_ = false;
    double r = normalized(d);
    if (r > residual_ || std::isnan(r)) residual_ = r;
  }
  void equal(const Point<S>& p, const Point<S>& q) { defect(point_defect(p, q, ref_)); }
  void on_circle(const Point<S>& p, const Circle<S>& c) { defect(on_circle_defect(p, c)); }
  void on_line(const Point<S>& p, const Line<S>& l) { defect(on_line_defect(p, l)); }
  void on_conic(const Conic<S>& k, const Point<S>& p) { defect(on_conic_defect(k, p)); }
  void on_conic(const Conic<S>& k, const HPoint<S>& p) {
    std::array<S, 6> mono{S(k.a * p.X * p.X), S(k.b * p.X * p.Y), S(k.c * p.Y * p.Y),
                          S(k.d * p.X * p.W), S(k.e * p.Y * p.W), S(k.f * p.W * p.W)};
    S scale(0);
    for (const S& m : mono) scale = smax<S>({scale, m});
    defect({k.eval(p), scale});
  }
  void perpendicular(const Point<S>& u, const Point<S>& v) { defect({dot(u, v), S(max_abs(u) * max_abs(v))}); }
  void parallel(const Point<S>& u, const Point<S>& v) { defect({cross(u, v), S(max_abs(u) * max_abs(v))}); }
  void collinear(const Point<S>& p, const Point<S>& q, const Point<S>& r) { parallel(q - p, r - p); }
  void same_line(const Line<S>& l1, const Line<S>& l2) {
    defect(proportional_defect<S>({l1.a, l1.b, l1.c}, {l2.a, l2.b, l2.c}));
  }
  void same_hpoint(const HPoint<S>& p, const HPoint<S>& q) {
    defect(proportional_defect<S>({p.X, p.Y, p.W}, {q.X, q.Y, q.W}));
  }
  void zero(const S& value, const S& scale) { defect({value, scale}); }

  bool passed() const { return ok_; }
  double residual() const { return residual_; }

 private:
  S ref_;
  Tolerance tol_;
  bool ok_ = true;
  double residual_ = 0.0;
};

template <class S>
struct Ctx {
  const Triangle<S>& t;
  Point<S> P;
  Tolerance tol;
  std::vector<std::string>& flags;

  const Point<S>& A() const { return t.A; }
  const Point<S>& B() const { return t.B; }
  const Point<S>& C() const { return t.C; }
};

template <class S>
using CheckFn = void (*)(const Ctx<S>&, Assertions<S>&);

template <class S>
Point<S> antipode_in(const Point<S>& p, const Point<S>& center) {
  return reflect(p, center);
}

template <class S>
std::array<Point<S>, 3> sub_orthocenters(const Ctx<S>& c, const PartialOrthocenters<S>& h) {
  return {orthocenter(c.A(), h.HB, h.HC, c.tol), orthocenter(c.B(), h.HC, h.HA, c.tol),
          orthocenter(c.C(), h.HA, h.HB, c.tol)};
}

template <class S>
std::array<Circle<S>, 3> sub_circles(const Ctx<S>& c, const PartialOrthocenters<S>& h) {
  return {circle_through(c.A(), h.HB, h.HC, c.tol), circle_through(c.B(), h.HC, h.HA, c.tol),
          circle_through(c.C(), h.HA, h.HB, c.tol)};
}

/// Fuhrmann vertices by the circumcenter definition, without postconditions.
template <class S>
std::array<Point<S>, 3> fuhrmann_vertices(const Ctx<S>& c, const PartialOrthocenters<S>& h) {
  return {circumcenter(h.HA, c.B(), c.C(), c.tol), circumcenter(h.HB, c.C(), c.A(), c.tol),
          circumcenter(h.HC, c.A(), c.B(), c.tol)};
}

template <class S>
std::array<Point<S>, 3> anti_fuhrmann_vertices(const Ctx<S>& c, const PartialOrthocenters<S>& h) {
  return {circumcenter(c.A(), h.HB, h.HC, c.tol), circumcenter(c.B(), h.HC, h.HA, c.tol),
          circumcenter(c.C(), h.HA, h.HB, c.tol)};
}

/// Euler line of a triangle through its circumcenter and orthocenter.
template <class S>
Line<S> euler_line(const std::array<Point<S>, 3>& v, Tolerance tol) {
  return line_through(circumcenter(v[0], v[1], v[2], tol), orthocenter(v[0], v[1], v[2], tol), tol);
}

// --- Rectangular circumhyperbola -------------------------------------------

template <class S>
void check_t01(const Ctx<S>& c, Assertions<S>& a) {
  Point<S> H = orthocenter(c.A(), c.B(), c.C(), c.tol);
  // Forward: the circumconic through H is rectangular.
  FittedConic<S> fit = conic_through_5<S>({c.A(), c.B(), c.C(), H, c.P}, c.tol);
  a.zero(S(fit.conic.a + fit.conic.c), smax<S>({fit.conic.a, fit.conic.b, fit.conic.c}));
  // Converse: the rectangular member of the pencil through A, B, C, P,
  // found without reference to H, passes through H.
  auto [k1, k2] = conic_pencil_4<S>({c.A(), c.B(), c.C(), c.P}, c.tol);
  S t1 = k1.a + k1.c;
  S t2 = k2.a + k2.c;
  Conic<S> rect{S(t2 * k1.a - t1 * k2.a), S(t2 * k1.b - t1 * k2.b), S(t2 * k1.c - t1 * k2.c),
                S(t2 * k1.d - t1 * k2.d), S(t2 * k1.e - t1 * k2.e), S(t2 * k1.f - t1 * k2.f)};
  a.on_conic(rect, H);
}

template <class S>
void check_t02(const Ctx<S>& c, Assertions<S>& a) {
  Conic<S> k = rectangular_circumhyperbola(c.A(), c.B(), c.C(), c.P, c.tol);
  auto h = partial_orthocenters(c.A(), c.B(), c.C(), c.P, c.tol);
  Point<S> H = orthocenter(c.A(), c.B(), c.C(), c.tol);
  struct Case {
    Point<S> apex, u, v, expected;
  };
  const std::array<Case, 4> cases{{{c.A(), c.B(), c.C(), H},
                                   {c.P, c.B(), c.C(), h.HA},
                                   {c.P, c.C(), c.A(), h.HB},
                                   {c.P, c.A(), c.B(), h.HC}}};
  for (const Case& cs : cases) {
    Line<S> perp = perpendicular_through(cs.apex, line_through(cs.u, cs.v, c.tol));
    Point<S> d = to_point(second_intersection(k, perp, HPoint<S>(cs.apex), c.tol), c.tol);
    a.equal(d, cs.expected);
    a.perpendicular(d - cs.u, cs.v - cs.apex);
    a.perpendicular(d - cs.v, cs.u - cs.apex);
  }
}

template <class S>
void check_t03(const Ctx<S>& c, Assertions<S>& a) {
  Conic<S> k = rectangular_circumhyperbola(c.A(), c.B(), c.C(), c.P, c.tol);
  Point<S> Hp = conic_antipode(k, orthocenter(c.A(), c.B(), c.C(), c.tol), c.tol);
  a.on_circle(Hp, circumcircle(c.t, c.tol));
  a.on_conic(k, Hp);
}

// --- Quadrangle ---------------------------------------------------------------

template <class S>
void check_t04(const Ctx<S>& c, Assertions<S>& a) {
  auto h = partial_orthocenters(c.A(), c.B(), c.C(), c.P, c.tol);
  auto x = sub_orthocenters(c, h);
  a.equal(x[0], x[1]);
  a.equal(x[0], x[2]);
  a.equal(x[1], x[2]);
}

template <class S>
void check_t05(const Ctx<S>& c, Assertions<S>& a) {
  QuadrangleDerived<S> q = derive_quadrangle(c.A(), c.B(), c.C(), c.P, c.tol);
  PartialOrthocenters<S> h{q.HA, q.HB, q.HC};
  for (const auto& circ : sub_circles(c, h)) a.on_circle(q.Xp, circ);
  a.on_conic(q.conic, q.Xp);
}

template <class S>
void check_t06(const Ctx<S>& c, Assertions<S>& a) {
  QuadrangleDerived<S> q = derive_quadrangle(c.A(), c.B(), c.C(), c.P, c.tol);
  if (!q.M) fail(ErrorCode::kAtInfinity, "midpoint of QQ* at infinity");
  Point<S> conj = to_point(isogonal_conjugate(c.t, *q.M, c.tol), c.tol);
  a.equal(conj, q.Xp);
  PartialOrthocenters<S> h{q.HA, q.HB, q.HC};
  for (const auto& circ : sub_circles(c, h)) a.on_circle(conj, circ);
  // Harmonic division on line OQ.
  EulerCenters<S> ec = classic_centers(c.t, c.tol);
  Point<S> qpt = to_point(q.Q, c.tol);
  HPoint<S> q_inf = HPoint<S>::at_infinity(qpt - ec.O);
  S cr = cross_ratio(q.Q, q.Qstar, HPoint<S>(*q.M), q_inf, c.tol);
  a.zero(S(cr + 1), S(1));
}

template <class S>
void check_t07(const Ctx<S>& c, Assertions<S>& a) {
  QuadrangleDerived<S> q = derive_quadrangle(c.A(), c.B(), c.C(), c.P, c.tol);
  a.parallel(q.Xp - q.H, q.Pp - c.P);
  Line<S> tau = tangent_at(q.conic, c.P, c.tol);
  a.parallel(q.X - q.H, tau.direction());
}

template <class S>
void check_t08(const Ctx<S>& c, Assertions<S>& a) {
  QuadrangleDerived<S> q = derive_quadrangle(c.A(), c.B(), c.C(), c.P, c.tol);
  // D, E, F = HA, HB, HC all lie on the hyperbola.
  a.on_conic(q.conic, q.HA);
  a.on_conic(q.conic, q.HB);
  a.on_conic(q.conic, q.HC);
  // P is an orthology center: DP ⊥ BC, EP ⊥ CA, FP ⊥ AB.
  a.perpendicular(c.P - q.HA, c.C() - c.B());
  a.perpendicular(c.P - q.HB, c.A() - c.C());
  a.perpendicular(c.P - q.HC, c.B() - c.A());
  // The other orthology center X: AX ⊥ EF, BX ⊥ FD, CX ⊥ DE, and X on H.
  a.perpendicular(q.X - c.A(), q.HC - q.HB);
  a.perpendicular(q.X - c.B(), q.HA - q.HC);
  a.perpendicular(q.X - c.C(), q.HB - q.HA);
  a.on_conic(q.conic, q.X);
}

template <class S>
void check_t09(const Ctx<S>& c, Assertions<S>& a) {
  CentroidSet<S> g = centroid_quadruples(c.A(), c.B(), c.C(), c.P, c.tol);
  a.defect(concyclic_defect(g.G, g.GA, g.GB, g.GC));
  if (collinear(g.G, g.GA, g.GB, c.tol) && collinear(g.G, g.GA, g.GC, c.tol)) c.flags.push_back("collinear-quadruple");
}

template <class S>
void check_t10(const Ctx<S>& c, Assertions<S>& a) {
  CentroidSet<S> g = centroid_quadruples(c.A(), c.B(), c.C(), c.P, c.tol);
  a.perpendicular(g.GA - g.G, c.P - c.A());
  a.perpendicular(g.GB - g.G, c.P - c.B());
  a.perpendicular(g.GC - g.G, c.P - c.C());
}

// --- Incenter specialization -----------------------------------------------

template <class S>
void check_t11(const Ctx<S>& c, Assertions<S>& a) {
  ArcMidpoints<S> arcs = arc_midpoints(c.t, c.P, c.tol);
  auto h = partial_orthocenters(c.A(), c.B(), c.C(), c.P, c.tol);
  auto f = fuhrmann_vertices(c, h);
  struct Case {
    Point<S> mid, u, v, fv;
    Line<S> side;
  };
  const std::array<Case, 3> cases{{{arcs.A0, c.B(), c.C(), f[0], c.t.side_a()},
                                   {arcs.B0, c.C(), c.A(), f[1], c.t.side_b()},
                                   {arcs.C0, c.A(), c.B(), f[2], c.t.side_c()}}};
  for (const Case& cs : cases) {
    S du = dist2(cs.mid, cs.u), dv = dist2(cs.mid, cs.v), di = dist2(cs.mid, c.P);
    a.zero(S(du - dv), smax(du, dv));
    a.zero(S(du - di), smax(du, di));
    a.equal(cs.fv, reflect(cs.mid, cs.side));
  }
}

template <class S>
void check_t12(const Ctx<S>& c, Assertions<S>& a) {
  auto h = partial_orthocenters(c.A(), c.B(), c.C(), c.P, c.tol);
  Point<S> na = nagel_point(c.P, centroid(c.A(), c.B(), c.C()));
  for (const auto& x : sub_orthocenters(c, h)) a.equal(x, na);
}

template <class S>
void check_t13(const Ctx<S>& c, Assertions<S>& a) {
  Incircle<S> in = incircle(c.t, c.tol);
  Circle<S> circ = in.circle();
  auto h = partial_orthocenters(c.A(), c.B(), c.C(), c.P, c.tol);
  a.same_line(polar(circ, midpoint(c.B(), c.C())), line_through(h.HB, h.HC, c.tol));
  a.same_line(polar(circ, midpoint(c.C(), c.A())), line_through(h.HC, h.HA, c.tol));
  a.same_line(polar(circ, midpoint(c.A(), c.B())), line_through(h.HA, h.HB, c.tol));
}

template <class S>
struct FuhrmannScene {
  EulerCenters<S> ec;
  PartialOrthocenters<S> h;
  std::array<Point<S>, 3> f;   // Oa, Ob, Oc
  std::array<Point<S>, 3> r;   // OA, OB, OC
  Circle<S> omega_f;
  Circle<S> omega_r;
};

template <class S>
FuhrmannScene<S> fuhrmann_scene(const Ctx<S>& c) {
  FuhrmannScene<S> s;
  s.ec = classic_centers(c.t, c.tol);
  s.h = partial_orthocenters(c.A(), c.B(), c.C(), c.P, c.tol);
  s.f = fuhrmann_vertices(c, s.h);
  s.r = anti_fuhrmann_vertices(c, s.h);
  s.omega_f = circle_through(s.f[0], s.f[1], s.f[2], c.tol);
  s.omega_r = circle_through(s.r[0], s.r[1], s.r[2], c.tol);
  return s;
}

template <class S>
void check_t14(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  a.on_circle(s.ec.H, s.omega_f);
}

template <class S>
void check_t15(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  a.equal(s.omega_f.center, reflect(c.P, s.ec.N));
}

template <class S>
void check_t16(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  Point<S> na = nagel_point(c.P, s.ec.G);
  a.equal(midpoint(s.ec.H, na), s.omega_f.center);
  a.on_circle(na, s.omega_f);
}

template <class S>
void check_t17(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  a.equal(orthocenter(s.f[0], s.f[1], s.f[2], c.tol), c.P);
}

/// The Euler reflection point of `tri` is `expected`: it lies on all three
/// reflections of the Euler line and on the circumcircle.
template <class S>
void assert_euler_reflection_point(const std::array<Point<S>, 3>& tri, const Point<S>& expected, const Ctx<S>& c,
                                   Assertions<S>& a) {
  Line<S> euler = euler_line(tri, c.tol);
  for (int i = 0; i < 3; ++i) {
    Line<S> side = line_through(tri[(i + 1) % 3], tri[(i + 2) % 3], c.tol);
    a.on_line(expected, reflect(euler, side));
  }
  a.on_circle(expected, circle_through(tri[0], tri[1], tri[2], c.tol));
}

template <class S>
void check_t18(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  assert_euler_reflection_point(s.f, s.ec.H, c, a);
}

template <class S>
void check_t19(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  Point<S> hi = s.ec.H + c.P;
  for (int i = 0; i < 3; ++i) a.equal(s.r[i], hi - s.f[i]);
}

template <class S>
void check_t20(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  a.equal(orthocenter(s.r[0], s.r[1], s.r[2], c.tol), s.ec.H);
  assert_euler_reflection_point(s.r, c.P, c, a);
}

template <class S>
void check_t21(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  a.equal(s.omega_r.center, reflect(s.ec.O, c.P));
  a.on_circle(c.P, s.omega_r);
}

template <class S>
void check_t22(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  // Circumcircles of A HB HC and B HC HA meet at HC and at the reflection of
  // HC in their line of centers.
  Point<S> xp = reflect(s.h.HC, line_through(s.r[0], s.r[1], c.tol));
  a.on_circle(xp, circle_through(c.C(), s.h.HA, s.h.HB, c.tol));
  const Point<S>& o_r = s.omega_r.center;
  a.collinear(xp, o_r, s.ec.H);
  // For P = I the hyperbola center is F_e and X = Na, so X' = 2 F_e - Na.
  S r = inradius(c.t, c.tol);
  Point<S> fe = feuerbach_point(s.ec.N, c.P, s.ec.R2, r, c.tol);
  a.equal(fe, midpoint(nagel_point(c.P, s.ec.G), xp));
}

template <class S>
void check_t23(const Ctx<S>& c, Assertions<S>& a) {
  auto s = fuhrmann_scene(c);
  Line<S> euler = euler_line(s.r, c.tol);
  const std::array<Point<S>, 3> hs{s.h.HA, s.h.HB, s.h.HC};
  for (int i = 0; i < 3; ++i) {
    Line<S> side = line_through(s.r[(i + 1) % 3], s.r[(i + 2) % 3], c.tol);
    a.same_line(reflect(euler, side), line_through(hs[i], c.P, c.tol));
  }
}

// --- Isogonal structure and centroids -----------------------------------------

template <class S>
void check_t24(const Ctx<S>& c, Assertions<S>& a) {
  QuadrangleDerived<S> q = derive_quadrangle(c.A(), c.B(), c.C(), c.P, c.tol);
  EulerCenters<S> ec = classic_centers(c.t, c.tol);
  Point<S> qpt = to_point(q.Q, c.tol);
  Point<S> dir = qpt - ec.O;
  const std::array<S, 8> ks{S(2), S(-1), S(1) / S(2), S(3), S(-2), S(1) / S(3), S(5), S(-1) / S(2)};
  int used = 0;
  for (const S& k : ks) {
    if (used == 4) break;
    Point<S> sample = ec.O + dir * k;
    try {
      a.on_conic(q.conic, isogonal_conjugate(c.t, sample, c.tol));
      ++used;
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::kOnSideline) throw;
    }
  }
  if (used < 4) fail(ErrorCode::kOnSideline, "fewer than four usable points on line OQ");
  a.same_hpoint(isogonal_conjugate(c.t, q.Pp, c.tol), q.Qstar);
  a.same_hpoint(isogonal_conjugate(c.t, HPoint<S>::at_infinity(dir), c.tol), HPoint<S>(q.Hp));
}

template <class S>
void check_t25(const Ctx<S>& c, Assertions<S>& a) {
  CentroidSet<S> g = centroid_quadruples(c.A(), c.B(), c.C(), c.P, c.tol);
  a.equal(midpoint(g.G, g.Gp), g.T);
  a.equal(midpoint(g.GA, g.Ga), g.T);
  a.equal(midpoint(g.GB, g.Gb), g.T);
  a.equal(midpoint(g.GC, g.Gc), g.T);
}

template <class S>
void check_t26(const Ctx<S>& c, Assertions<S>& a) {
  Point<S> z = poncelet_point(c.A(), c.B(), c.C(), c.P, c.tol);
  a.on_circle(z, nine_point_circle(c.A(), c.B(), c.C(), c.tol));
  a.on_circle(z, nine_point_circle(c.B(), c.P, c.C(), c.tol));
  a.on_circle(z, nine_point_circle(c.C(), c.P, c.A(), c.tol));
  a.on_circle(z, nine_point_circle(c.A(), c.B(), c.P, c.tol));
}

template <class S>
constexpr std::array<CheckFn<S>, 26> kFns{
    &check_t01<S>, &check_t02<S>, &check_t03<S>, &check_t04<S>, &check_t05<S>, &check_t06<S>, &check_t07<S>,
    &check_t08<S>, &check_t09<S>, &check_t10<S>, &check_t11<S>, &check_t12<S>, &check_t13<S>, &check_t14<S>,
    &check_t15<S>, &check_t16<S>, &check_t17<S>, &check_t18<S>, &check_t19<S>, &check_t20<S>, &check_t21<S>,
    &check_t22<S>, &check_t23<S>, &check_t24<S>, &check_t25<S>, &check_t26<S>};

// --- Gates -------------------------------------------------------------------

template <class S>
bool off_sidelines(const Triangle<S>& t, const Point<S>& p, Tolerance tol) {
  return !collinear(p, t.B, t.C, tol) && !collinear(p, t.C, t.A, tol) && !collinear(p, t.A, t.B, tol);
}

template <class S>
std::optional<std::string> gate_impl(const CheckInfo& info, const Config<S>& cfg, Tolerance tol) {
  const Triangle<S>& t = cfg.triangle;
  if (collinear(t.A, t.B, t.C, tol)) return "degenerate triangle";
  const Requirements& req = info.req;

  if (req.incenter) {
    if (cfg.P) return "check requires P = incenter";
    Point<S> I;
    try {
      I = incenter(t, tol);
    } catch (const GeometryError& e) {
      return std::string("incenter unavailable: ") + e.what();
    }
    EulerCenters<S> ec = classic_centers(t, tol);
    if (coincide(t, ec.N, I, tol)) return "equilateral triangle";
    return std::nullopt;
  }

  if (!cfg.P) return "check requires an explicit P";
  const Point<S>& P = *cfg.P;
  if (!off_sidelines(t, P, tol)) return "P on a sideline";
  auto h = partial_orthocenters(t.A, t.B, t.C, P, tol);
  if (req.subtriangles) {
    if (collinear(t.A, h.HB, h.HC, tol) || collinear(t.B, h.HC, h.HA, tol) || collinear(t.C, h.HA, h.HB, tol)) {
      return "degenerate sub-triangle";
    }
  }
  EulerCenters<S> ec = classic_centers(t, tol);
  if (req.conic) {
    for (const auto& v : {t.A, t.B, t.C})
      if (same_point(ec.H, v, tol)) return "right triangle";
    if (same_point(P, ec.H, tol)) return "P equals H";
    if (on_line(P, perpendicular_through(t.A, t.side_a()), tol) ||
        on_line(P, perpendicular_through(t.B, t.side_b()), tol) ||
        on_line(P, perpendicular_through(t.C, t.side_c()), tol)) {
      return "P on an altitude";
    }
  }
  Circle<S> omega{ec.O, ec.R2};
  if (req.off_circumcircle && on_circle(P, omega, tol)) return "P on the circumcircle";
  if (req.navneel || req.isogonal_line) {
    HPoint<S> q = isogonal_conjugate(t, P, tol);
    if (is_infinite(q, tol)) return "Q at infinity";
    Point<S> qp = to_point(q, tol);
    if (same_point(qp, ec.O, tol)) return "Q equals O";
    if (req.navneel) {
      Point<S> m = midpoint(qp, to_point(invert(omega, qp), tol));
      if (!off_sidelines(t, m, tol)) return "midpoint of QQ* on a sideline";
      if (is_infinite(isogonal_conjugate(t, m, tol), tol)) return "conjugate of M at infinity";
    }
    if (req.isogonal_line) {
      Point<S> z = poncelet_point(t.A, t.B, t.C, P, tol);
      if (!off_sidelines(t, reflect(P, z), tol)) return "P' on a sideline";
      if (!off_sidelines(t, reflect(ec.H, z), tol)) return "H' on a sideline";
      Point<S> dir = qp - ec.O;
      for (const auto& side : {t.B - t.C, t.C - t.A, t.A - t.B}) {
        if (negligible(cross(dir, side), S(max_abs(dir) * max_abs(side)), tol)) return "OQ parallel to a sideline";
      }
    }
  }
  return std::nullopt;
}

// --- Conditioning (double precision diagnostics) ---------------------------

using DPoint = Point<double>;

double sin_min_angle(const DPoint& p, const DPoint& q, const DPoint& r) {
  auto s = [](const DPoint& o, const DPoint& u, const DPoint& v) {
    DPoint a = u - o, b = v - o;
    double n = std::sqrt(norm2(a) * norm2(b));
    return n == 0 ? 0.0 : std::abs(cross(a, b)) / n;
  };
  return std::min({s(p, q, r), s(q, r, p), s(r, p, q)});
}

double abs_cos_min(const DPoint& p, const DPoint& q, const DPoint& r) {
  auto c = [](const DPoint& o, const DPoint& u, const DPoint& v) {
    DPoint a = u - o, b = v - o;
    double n = std::sqrt(norm2(a) * norm2(b));
    return n == 0 ? 0.0 : std::abs(dot(a, b)) / n;
  };
  return std::min({c(p, q, r), c(q, r, p), c(r, p, q)});
}

/// Smallest normalized barycentric coordinate of a (homogeneous) point.
double bary_margin(const Triangle<double>& t, const HPoint<double>& p) {
  auto det3 = [](const HPoint<double>& u, const HPoint<double>& v, const HPoint<double>& w) {
    return u.X * (v.Y * w.W - v.W * w.Y) - u.Y * (v.X * w.W - v.W * w.X) + u.W * (v.X * w.Y - v.Y * w.X);
  };
  HPoint<double> A(t.A), B(t.B), C(t.C);
  double x = std::abs(det3(p, B, C)), y = std::abs(det3(A, p, C)), z = std::abs(det3(A, B, p));
  double sum = x + y + z;
  return sum == 0 ? 0.0 : std::min({x, y, z}) / sum;
}

template <class S>
Triangle<double> to_double_triangle(const Triangle<S>& t) {
  auto d = [](const Point<S>& p) { return DPoint{to_double(p.x), to_double(p.y)}; };
  return {d(t.A), d(t.B), d(t.C)};
}

double margin_impl(const CheckInfo& info, const Triangle<double>& t, const std::optional<DPoint>& maybe_p) {
  const Requirements& req = info.req;
  double m = sin_min_angle(t.A, t.B, t.C);
  Tolerance loose{1e-12};
  try {
    EulerCenters<double> ec = classic_centers(t, loose);
    double R = std::sqrt(ec.R2);
    if (req.incenter) {
      Point<double> I = incenter(t, loose);
      m = std::min(m, std::sqrt(dist2(ec.N, I)) / R);
      return m;
    }
    if (!maybe_p) return 0.0;
    const DPoint& P = *maybe_p;
    m = std::min({m, sin_min_angle(t.B, P, t.C), sin_min_angle(t.C, P, t.A), sin_min_angle(t.A, t.B, P)});
    if (m <= 0) return m;
    auto h = partial_orthocenters(t.A, t.B, t.C, P, loose);
    if (req.subtriangles) {
      m = std::min({m, sin_min_angle(t.A, h.HB, h.HC), sin_min_angle(t.B, h.HC, h.HA),
                    sin_min_angle(t.C, h.HA, h.HB)});
    }
    if (req.conic) {
      m = std::min(m, abs_cos_min(t.A, t.B, t.C));
      m = std::min(m, std::sqrt(dist2(P, ec.H)) / R);
      for (const auto& [v, side] : {std::pair{t.A, t.side_a()}, std::pair{t.B, t.side_b()}, std::pair{t.C, t.side_c()}}) {
        Line<double> alt = perpendicular_through(v, side);
        double n = std::sqrt(alt.a * alt.a + alt.b * alt.b);
        m = std::min(m, std::abs(alt.eval(P)) / n / R);
      }
    }
    if (req.off_circumcircle) m = std::min(m, std::abs(dist2(P, ec.O) - ec.R2) / ec.R2);
    if (req.navneel || req.isogonal_line) {
      HPoint<double> q = isogonal_conjugate(t, P, loose);
      Point<double> qp = to_point(q, loose);
      m = std::min(m, std::sqrt(dist2(qp, ec.O)) / R);
      if (req.navneel) {
        Circle<double> omega{ec.O, ec.R2};
        Point<double> mid = midpoint(qp, to_point(invert(omega, qp), loose));
        m = std::min(m, bary_margin(t, mid));
        m = std::min(m, bary_margin(t, isogonal_conjugate(t, mid, loose)));
      }
      if (req.isogonal_line) {
        Point<double> z = poncelet_point(t.A, t.B, t.C, P, loose);
        m = std::min(m, bary_margin(t, reflect(P, z)));
        m = std::min(m, bary_margin(t, reflect(ec.H, z)));
        m = std::min(m, bary_margin(t, HPoint<double>::at_infinity(qp - ec.O)));
      }
    }
  } catch (const GeometryError&) {
    return 0.0;
  }
  return m;
}

}  // namespace

std::span<const CheckInfo> check_registry() { return kChecks; }

std::optional<std::size_t> find_check(std::string_view id) {
  for (std::size_t i = 0; i < kChecks.size(); ++i)
    if (kChecks[i].id == id) return i;
  return std::nullopt;
}

template <class S>
SerializedConfig serialize_config(const Config<S>& c) {
  SerializedConfig out;
  out.backend = kIsExact<S> ? "exact" : "float";
  auto pt = [](const Point<S>& p) { return std::array<std::string, 2>{format_scalar(p.x), format_scalar(p.y)}; };
  out.vertices = {pt(c.triangle.A), pt(c.triangle.B), pt(c.triangle.C)};
  if (c.P) out.P = pt(*c.P);
  out.provenance = c.provenance;
  return out;
}

template <class S>
std::optional<std::string> gate_violation(std::size_t check, const Config<S>& config, Tolerance tol) {
  try {
    return gate_impl(kChecks.at(check), config, tol);
  } catch (const GeometryError& e) {
    return std::string(e.what());
  }
}

template <class S>
double conditioning_margin(std::size_t check, const Config<S>& config) {
  Triangle<double> t = to_double_triangle(config.triangle);
  std::optional<DPoint> p;
  if (config.P) p = DPoint{to_double(config.P->x), to_double(config.P->y)};
  return margin_impl(kChecks.at(check), t, p);
}

template <class S>
CheckResult run_check(std::size_t check, const Config<S>& config, Tolerance tol) {
  const CheckInfo& info = kChecks.at(check);
  if (auto why = gate_violation(check, config, tol)) {
    fail(ErrorCode::kGateViolation, std::string(info.id) + ": " + *why);
  }
  auto start = std::chrono::steady_clock::now();
  CheckResult out;
  out.id = std::string(info.id);
  out.config = serialize_config(config);
  const Triangle<S>& t = config.triangle;
  S ref = smax<S>({t.A.x, t.A.y, t.B.x, t.B.y, t.C.x, t.C.y});
  try {
    Point<S> P = config.P ? *config.P : incenter(t, tol);
    ref = smax<S>({ref, P.x, P.y});
    Assertions<S> a(ref, tol);
    Ctx<S> ctx{t, P, tol, out.flags};
    kFns<S>[check](ctx, a);
    out.passed = a.passed();
    out.residual = a.residual();
    if constexpr (kIsExact<S>) {
      if (out.passed) out.residual = 0.0;
    }
  } catch (const GeometryError& e) {
    out.passed = false;
    out.residual = std::numeric_limits<double>::infinity();
    out.error = e.what();
  }
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

#define PONCELET_INSTANTIATE(S)                                                                           \
  template SerializedConfig serialize_config<S>(const Config<S>&);                                        \
  template std::optional<std::string> gate_violation<S>(std::size_t, const Config<S>&, Tolerance);        \
  template double conditioning_margin<S>(std::size_t, const Config<S>&);                                  \
  template CheckResult run_check<S>(std::size_t, const Config<S>&, Tolerance);

PONCELET_INSTANTIATE(Rational)
PONCELET_INSTANTIATE(double)
PONCELET_INSTANTIATE(Float50)

#undef PONCELET_INSTANTIATE

}  // namespace poncelet
