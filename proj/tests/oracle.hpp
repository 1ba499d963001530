#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's constructions; formulas are derived separately (Cramer's rule,
// cofactor expansion, angle reflection in floating point).

#include <cmath>
#include <vector>

#include "poncelet/suite.hpp"

namespace oracle {

using poncelet::Point;
using poncelet::Rational;
using Q = Rational;
using QP = Point<Q>;

inline Q q(const char* s) { return poncelet::parse_rational(s); }
inline QP qp(const char* x, const char* y) { return {q(x), q(y)}; }

/// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Q frac(long n, long d) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

/// Determinant by cofactor expansion along the first row.
inline Q det(const std::vector<std::vector<Q>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return Q(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
  Q out(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Q>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Q> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Q term = m[0][col] * det(minor);
    out += (col % 2 == 0) ? term : Q(-term);
  }
  return out;
}

/// Solves a 2x2 system [a b; c d] [x y]^T = [e f]^T by Cramer's rule.
inline QP cramer(const Q& a, const Q& b, const Q& c, const Q& d, const Q& e, const Q& f) {
  Q D = a * d - b * c;
  return {Q((e * d - b * f) / D), Q((a * f - e * c) / D)};
}

/// Circumcenter from |X-p|^2 = |X-q|^2 = |X-r|^2 as a linear system.
inline QP circumcenter(const QP& p, const QP& q, const QP& r) {
  auto n2 = [](const QP& v) { return Q(v.x * v.x + v.y * v.y); };
  return cramer(Q(2 * (q.x - p.x)), Q(2 * (q.y - p.y)), Q(2 * (r.x - p.x)), Q(2 * (r.y - p.y)), Q(n2(q) - n2(p)),
                Q(n2(r) - n2(p)));
}

/// Orthocenter from the Euler relation H = A + B + C - 2 O.
inline QP orthocenter(const QP& a, const QP& b, const QP& c) {
  QP o = circumcenter(a, b, c);
  return {Q(a.x + b.x + c.x - 2 * o.x), Q(a.y + b.y + c.y - 2 * o.y)};
}

/// Conic through five points: coefficient k is the signed 5x5 minor of the
/// 5x6 design matrix with column k removed.
inline std::array<Q, 6> conic_through(const std::array<QP, 5>& pts) {
  std::vector<std::vector<Q>> rows;
  for (const auto& p : pts) rows.push_back({Q(p.x * p.x), Q(p.x * p.y), Q(p.y * p.y), p.x, p.y, Q(1)});
  std::array<Q, 6> out;
  for (int k = 0; k < 6; ++k) {
    std::vector<std::vector<Q>> m;
    for (const auto& row : rows) {
      std::vector<Q> r;
      for (int c = 0; c < 6; ++c)
        if (c != k) r.push_back(row[c]);
      m.push_back(std::move(r));
    }
    Q d = det(m);
    out[k] = (k % 2 == 0) ? d : Q(-d);
  }
  return out;
}

inline Q conic_eval(const std::array<Q, 6>& k, const QP& p) {
  return Q(k[0] * p.x * p.x + k[1] * p.x * p.y + k[2] * p.y * p.y + k[3] * p.x + k[4] * p.y + k[5]);
}

/// True when u and v are proportional (as coefficient vectors).
template <std::size_t N>
bool proportional(const std::array<Q, N>& u, const std::array<Q, N>& v) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

// --- Floating-point oracles ---------------------------------------------------

using DP = Point<double>;

inline DP unit(const DP& v) {
  double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

/// Isogonal conjugate by reflecting each cevian direction in the internal
/// angle bisector and intersecting two of the reflected lines.
inline DP isogonal_by_reflection(const DP& a, const DP& b, const DP& c, const DP& p) {
  auto reflected_direction = [](const DP& v, const DP& u, const DP& w, const DP& target) {
    DP bis = unit(unit(u - v) + unit(w - v));
    DP d = target - v;
    double k = 2 * (d.x * bis.x + d.y * bis.y);
    return DP{bis.x * k - d.x, bis.y * k - d.y};
  };
  DP da = reflected_direction(a, b, c, p);
  DP db = reflected_direction(b, c, a, p);
  // a + s*da = b + t*db
  double det = da.x * (-db.y) - da.y * (-db.x);
  DP r = b - a;
  double s = (r.x * (-db.y) - r.y * (-db.x)) / det;
  return {a.x + s * da.x, a.y + s * da.y};
}

/// Nagel point from barycentrics (s - a : s - b : s - c).
inline DP nagel_barycentric(const DP& A, const DP& B, const DP& C) {
  double a = std::hypot(B.x - C.x, B.y - C.y);
  double b = std::hypot(C.x - A.x, C.y - A.y);
  double c = std::hypot(A.x - B.x, A.y - B.y);
  double s = (a + b + c) / 2;
  double wa = s - a, wb = s - b, wc = s - c, w = wa + wb + wc;
  return {(wa * A.x + wb * B.x + wc * C.x) / w, (wa * A.y + wb * B.y + wc * C.y) / w};
}

inline double dist(const DP& p, const DP& q) { return std::hypot(p.x - q.x, p.y - q.y); }

}  // namespace oracle
