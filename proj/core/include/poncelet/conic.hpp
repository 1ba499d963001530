#pragma once

#include <array>
#include <utility>
#include <vector>

#include "poncelet/primitives.hpp"

namespace poncelet {

/// Conic a*x^2 + b*xy + c*y^2 + d*x + e*y + f = 0, defined up to scale.
/// The symmetric matrix form is
///   [ a    b/2  d/2 ]
///   [ b/2  c    e/2 ]
///   [ d/2  e/2  f   ]
template <class S>
struct Conic {
  S a{0}, b{0}, c{0}, d{0}, e{0}, f{0};

  std::array<S, 6> coefficients() const { return {a, b, c, d, e, f}; }

  std::array<std::array<S, 3>, 3> matrix() const {
    S b2 = b / 2, d2 = d / 2, e2 = e / 2;
    return {{{a, b2, d2}, {b2, c, e2}, {d2, e2, f}}};
  }

  S eval(const Point<S>& p) const {
    return S(a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f);
  }

  S eval(const HPoint<S>& p) const {
    return S(a * p.X * p.X + b * p.X * p.Y + c * p.Y * p.Y + d * p.X * p.W + e * p.Y * p.W + f * p.W * p.W);
  }

  /// Symmetric bilinear form u^T M v.
  S bilinear(const HPoint<S>& u, const HPoint<S>& v) const {
    auto m = matrix();
    std::array<S, 3> uu{u.X, u.Y, u.W};
    std::array<S, 3> vv{v.X, v.Y, v.W};
    S out(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out += uu[i] * m[i][j] * vv[j];
    return out;
  }

  S determinant() const {
    auto m = matrix();
    return S(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
  }

  S scale() const { return smax<S>({a, b, c, d, e, f}); }
};

/// The scale includes the non-constant coefficients at unit distance: at the
/// origin every monomial but f vanishes, and f carries the fit's rounding.
template <class S>
Defect<S> on_conic_defect(const Conic<S>& k, const Point<S>& p) {
  S x2 = p.x * p.x, xy = p.x * p.y, y2 = p.y * p.y;
  return {k.eval(p), smax<S>({S(k.a * x2), S(k.b * xy), S(k.c * y2), S(k.d * p.x), S(k.e * p.y), k.f, k.a, k.b, k.c,
                              k.d, k.e})};
}

template <class S>
bool on_conic(const Conic<S>& k, const Point<S>& p, Tolerance tol = kDefaultTolerance) {
  return holds(on_conic_defect(k, p), tol);
}

template <class S>
bool on_conic(const Conic<S>& k, const HPoint<S>& p, Tolerance tol = kDefaultTolerance) {
  std::array<S, 6> mono{S(k.a * p.X * p.X), S(k.b * p.X * p.Y), S(k.c * p.Y * p.Y),
                        S(k.d * p.X * p.W), S(k.e * p.Y * p.W), S(k.f * p.W * p.W)};
  S scale(0);
  for (const S& m : mono) scale = smax<S>({scale, m});
  return negligible(k.eval(p), scale, tol);
}

template <class S>
bool is_degenerate(const Conic<S>& k, Tolerance tol = kDefaultTolerance) {
  S s = k.scale();
  return negligible(k.determinant(), S(s * s * s), tol);
}

template <class S>
bool same_conic(const Conic<S>& k1, const Conic<S>& k2, Tolerance tol = kDefaultTolerance) {
  auto u = k1.coefficients();
  auto v = k2.coefficients();
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      S lhs = u[i] * v[j];
      S rhs = u[j] * v[i];
      S scale = k1.scale() * k2.scale();
      if (!negligible(S(lhs - rhs), scale, tol)) return false;
    }
  }
  return true;
}

/// Basis of the null space of `rows`, by Gauss-Jordan elimination. Floating
/// backends pivot on the largest entry and treat pivots below eps times the
/// largest matrix entry as zero.
template <class S, std::size_t N>
std::vector<std::array<S, N>> null_space(std::vector<std::array<S, N>> rows, Tolerance tol = kDefaultTolerance) {
  S big(0);
  for (const auto& r : rows)
    for (const S& v : r) big = smax<S>({big, v});

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < N && rank < rows.size(); ++col) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if constexpr (kIsExact<S>) {
        if (rows[r][col] != 0) {
          best = r;
          break;
        }
      } else {
        if (sabs(rows[best][col]) < sabs(rows[r][col])) best = r;
      }
    }
    if (negligible(rows[best][col], big, tol)) continue;
    std::swap(rows[rank], rows[best]);
    S inv = S(1) / rows[rank][col];
    for (std::size_t k = 0; k < N; ++k) rows[rank][k] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      S factor = rows[r][col];
      for (std::size_t k = 0; k < N; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<std::array<S, N>> basis;
  std::vector<bool> is_pivot(N, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < N; ++free) {
    if (is_pivot[free]) continue;
    std::array<S, N> v{};
    for (auto& x : v) x = 0;
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
    basis.push_back(v);
  }
  return basis;
}

namespace detail {

/// Similarity that maps the points to zero mean and unit spread; applied to
/// floating fits to keep the design matrix well conditioned.
template <class S>
struct Normalizer {
  Point<S> shift{S(0), S(0)};
  S scale{1};

  template <class Range>
  static Normalizer from(const Range& pts) {
    Normalizer n;
    if constexpr (kIsExact<S>) return n;
    S sx(0), sy(0);
    for (const auto& p : pts) {
      sx += p.x;
      sy += p.y;
    }
    S count(static_cast<double>(pts.size()));
    n.shift = {S(sx / count), S(sy / count)};
    S spread(0);
    for (const auto& p : pts) spread = smax<S>({spread, S(p.x - n.shift.x), S(p.y - n.shift.y)});
    if (spread > 0) n.scale = spread;
    return n;
  }

  Point<S> apply(const Point<S>& p) const { return (p - shift) / scale; }

  /// Coefficients in original coordinates of a conic given in normalized ones.
  Conic<S> restore(const Conic<S>& k) const {
    const S& tx = shift.x;
    const S& ty = shift.y;
    const S& s = scale;
    Conic<S> out;
    out.a = k.a;
    out.b = k.b;
    out.c = k.c;
    out.d = S(-2 * k.a * tx - k.b * ty + k.d * s);
    out.e = S(-k.b * tx - 2 * k.c * ty + k.e * s);
    out.f = S(k.a * tx * tx + k.b * tx * ty + k.c * ty * ty - k.d * s * tx - k.e * s * ty + k.f * s * s);
    return out;
  }
};

template <class S>
std::array<S, 6> conic_row(const Point<S>& p) {
  return {S(p.x * p.x), S(p.x * p.y), S(p.y * p.y), p.x, p.y, S(1)};
}

template <class S>
Conic<S> from_vector(const std::array<S, 6>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

template <class S, std::size_t K>
void require_distinct(const std::array<Point<S>, K>& pts, Tolerance tol) {
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j)
      if (same_point(pts[i], pts[j], tol)) fail(ErrorCode::kDuplicatePoints, "conic through repeated points");
}

}  // namespace detail

template <class S>
struct FittedConic {
  Conic<S> conic;
  bool degenerate = false;
};

/// The conic through five points. Degenerate (line-pair) conics are returned
/// with the flag raised rather than rejected.
template <class S>
FittedConic<S> conic_through_5(const std::array<Point<S>, 5>& pts, Tolerance tol = kDefaultTolerance) {
  detail::require_distinct(pts, tol);
  auto norm = detail::Normalizer<S>::from(pts);
  std::vector<std::array<S, 6>> rows;
  for (const auto& p : pts) rows.push_back(detail::conic_row(norm.apply(p)));
  auto basis = null_space(std::move(rows), tol);
  if (basis.size() != 1) fail(ErrorCode::kUnderdeterminedConic, "five points do not determine a unique conic");
  FittedConic<S> out;
  out.conic = norm.restore(detail::from_vector(basis[0]));
  out.degenerate = is_degenerate(out.conic, tol);
  return out;
}

/// Two conics spanning the pencil of conics through four points.
template <class S>
std::pair<Conic<S>, Conic<S>> conic_pencil_4(const std::array<Point<S>, 4>& pts, Tolerance tol = kDefaultTolerance) {
  detail::require_distinct(pts, tol);
  auto norm = detail::Normalizer<S>::from(pts);
  std::vector<std::array<S, 6>> rows;
  for (const auto& p : pts) rows.push_back(detail::conic_row(norm.apply(p)));
  auto basis = null_space(std::move(rows), tol);
  if (basis.size() != 2) fail(ErrorCode::kUnderdeterminedConic, "four points do not span a pencil");
  return {norm.restore(detail::from_vector(basis[0])), norm.restore(detail::from_vector(basis[1]))};
}

/// Pole of the line at infinity (last column of the adjugate). W == 0 for
/// parabolas. For a line pair the adjugate column is the singular point, the
/// limit of the centers of nearby conics; only double lines and parallel
/// pairs, where the column vanishes, are rejected.
template <class S>
HPoint<S> conic_center(const Conic<S>& k, Tolerance tol = kDefaultTolerance) {
  auto m = k.matrix();
  HPoint<S> h{S(m[0][1] * m[1][2] - m[0][2] * m[1][1]), S(m[0][2] * m[0][1] - m[0][0] * m[1][2]),
              S(m[0][0] * m[1][1] - m[0][1] * m[0][1])};
  S s = k.scale();
  S s2 = s * s;
  if (negligible(smax<S>({h.X, h.Y, h.W}), s2, tol)) fail(ErrorCode::kDegenerateConic, "conic has no center");
  return h;
}

template <class S>
Point<S> conic_center_point(const Conic<S>& k, Tolerance tol = kDefaultTolerance) {
  HPoint<S> h = conic_center(k, tol);
  if (h.W == 0 || is_infinite(h, tol)) fail(ErrorCode::kAtInfinity, "conic center at infinity (parabola)");
  return to_point(h, tol);
}

/// Rectangular hyperbola test via the vanishing trace a + c; asymptote
/// directions are never extracted. A line pair counts when its two lines are
/// perpendicular (the degenerate member of the rectangular family).
template <class S>
bool is_rectangular(const Conic<S>& k, Tolerance tol = kDefaultTolerance) {
  if (is_degenerate(k, tol)) (void)conic_center(k, tol);  // rejects double lines and parallel pairs
  return negligible(S(k.a + k.c), smax<S>({k.a, k.b, k.c}), tol);
}

/// Second intersection of a line with a conic through a known common point,
/// by eliminating the known root: for a second point D on the line, the
/// other root is q(D) * K - 2 B(K, D) * D. Tangency returns `known`.
template <class S>
HPoint<S> second_intersection(const Conic<S>& k, const Line<S>& l, const HPoint<S>& known,
                              Tolerance tol = kDefaultTolerance) {
  std::array<S, 3> lmono{S(l.a * known.X), S(l.b * known.Y), S(l.c * known.W)};
  if (!on_conic(k, known, tol) || !negligible(l.eval(known), smax<S>({lmono[0], lmono[1], lmono[2]}), tol)) {
    fail(ErrorCode::kKnownNotIncident, "known point is not on both conic and line");
  }
  HPoint<S> other;
  if (known.W == 0) {
    // Finite point of the line: the foot of the origin.
    other = {S(-l.a * l.c), S(-l.b * l.c), S(l.a * l.a + l.b * l.b)};
  } else {
    other = {l.b, S(-l.a), S(0)};
  }
  S qd = k.eval(other);
  S bkd = k.bilinear(known, other);
  if (qd == 0 && bkd == 0) fail(ErrorCode::kDegenerateConic, "line is a component of the conic");
  S two_b = 2 * bkd;
  return {S(qd * known.X - two_b * other.X), S(qd * known.Y - two_b * other.Y), S(qd * known.W - two_b * other.W)};
}

template <class S>
Point<S> conic_antipode(const Conic<S>& k, const Point<S>& p, Tolerance tol = kDefaultTolerance) {
  if (!on_conic(k, p, tol)) fail(ErrorCode::kNotOnConic, "antipode of a point off the conic");
  Point<S> z = conic_center_point(k, tol);
  return reflect(p, z);
}

template <class S>
Line<S> tangent_at(const Conic<S>& k, const Point<S>& p, Tolerance tol = kDefaultTolerance) {
  if (!on_conic(k, p, tol)) fail(ErrorCode::kNotOnConic, "tangent at a point off the conic");
  auto m = k.matrix();
  return {S(m[0][0] * p.x + m[0][1] * p.y + m[0][2]), S(m[1][0] * p.x + m[1][1] * p.y + m[1][2]),
          S(m[2][0] * p.x + m[2][1] * p.y + m[2][2])};
}

/// The rectangular circumhyperbola through A, B, C and P, realized as the
/// conic through A, B, C, the orthocenter and P.
template <class S>
Conic<S> rectangular_circumhyperbola(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                                     Tolerance tol = kDefaultTolerance) {
  if (collinear(A, B, C, tol)) fail(ErrorCode::kDegenerateTriangle, "triangle vertices are collinear");
  Point<S> H = orthocenter(A, B, C, tol);
  for (const auto& v : {A, B, C}) {
    if (same_point(H, v, tol)) fail(ErrorCode::kRightTriangle, "orthocenter coincides with a vertex");
  }
  for (const auto& v : {A, B, C, H}) {
    if (same_point(P, v, tol)) fail(ErrorCode::kBadP, "P coincides with a vertex or the orthocenter");
  }
  if (collinear(P, B, C, tol) || collinear(P, C, A, tol) || collinear(P, A, B, tol)) {
    fail(ErrorCode::kBadP, "P lies on a sideline");
  }
  // P on an altitude yields the perpendicular line pair (sideline, altitude);
  // it is returned as is and callers detect it with is_degenerate().
  return conic_through_5<S>({A, B, C, H, P}, tol).conic;
}

/// Poncelet point of ABCP: the center of the rectangular circumhyperbola.
template <class S>
Point<S> poncelet_point(const Point<S>& A, const Point<S>& B, const Point<S>& C, const Point<S>& P,
                        Tolerance tol = kDefaultTolerance) {
  return conic_center_point(rectangular_circumhyperbola(A, B, C, P, tol), tol);
}

}  // namespace poncelet
