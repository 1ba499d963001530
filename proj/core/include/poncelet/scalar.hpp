#pragma once

// Scalar backends. Every geometric routine in the library is a template over
// the field type S, instantiated with:
//   Rational - GMP rationals, arithmetic and equality are exact;
//   double   - IEEE floating point, predicates take a relative tolerance;
//   Float50  - 50-digit binary floating point, used to replay float failures
//              that have no exact rational counterpart.

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace poncelet {

using Rational = mpq_class;
using Float50 = boost::multiprecision::cpp_bin_float_50;

enum class Backend { kExact, kFloat };

constexpr std::string_view to_string(Backend b) {
  return b == Backend::kExact ? "exact" : "float";
}

template <class S>
inline constexpr bool kIsExact = std::is_same_v<S, Rational>;

struct Tolerance {
  double eps = 1e-9;
};

inline constexpr Tolerance kDefaultTolerance{};

template <class S>
S sabs(const S& v) {
  if (v < 0) return S(-v);
  return v;
}

template <class S>
const S& smax(const S& a, const S& b) {
  return a < b ? b : a;
}

template <class S>
S smax(std::initializer_list<S> values) {
  S best(0);
  for (const S& v : values) {
    S a = sabs(v);
    if (best < a) best = a;
  }
  return best;
}

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }
inline double to_double(const Float50& v) { return v.convert_to<double>(); }

/// Residual of one assertion: the raw defect and the magnitude it should be
/// compared against. Exact backends ignore the scale.
template <class S>
struct Defect {
  S value;
  S scale;
};

/// `value` is zero (exact) or below eps * scale (floating).
template <class S>
bool negligible(const S& value, const S& scale, Tolerance tol = kDefaultTolerance) {
  if constexpr (kIsExact<S>) {
    return value == 0;
  } else {
    return sabs(value) <= S(tol.eps) * sabs(scale);
  }
}

template <class S>
bool holds(const Defect<S>& d, Tolerance tol = kDefaultTolerance) {
  return negligible(d.value, d.scale, tol);
}

/// Scale-normalized defect as a double. Exact zero stays exactly zero.
template <class S>
double normalized(const Defect<S>& d) {
  if (d.value == 0) return 0.0;
  S a = sabs(d.value);
  S s = sabs(d.scale);
  if (s == 0) return to_double(a);
  S ratio = a / s;
  return to_double(ratio);
}

/// Square root when it stays inside the field. For rationals this requires
/// both numerator and denominator to be perfect squares.
inline std::optional<Rational> exact_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  const mpz_class& num = v.get_num();
  const mpz_class& den = v.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

inline std::optional<double> exact_sqrt(double v) {
  if (v < 0) return std::nullopt;
  return std::sqrt(v);
}

inline std::optional<Float50> exact_sqrt(const Float50& v) {
  if (v < 0) return std::nullopt;
  return Float50(boost::multiprecision::sqrt(v));
}

std::string format_scalar(const Rational& v);
std::string format_scalar(double v);
std::string format_scalar(const Float50& v);

/// Parses "p/q", integers and decimals (with optional exponent) exactly.
/// Throws GeometryError(kParse) on malformed input.
Rational parse_rational(std::string_view text);

template <class T, class S>
T scalar_cast(const S& v) {
  if constexpr (std::is_same_v<T, S>) {
    return v;
  } else if constexpr (std::is_same_v<T, double>) {
    return to_double(v);
  } else if constexpr (std::is_same_v<T, Rational>) {
    if constexpr (std::is_same_v<S, double>) {
      return Rational(v);
    } else {
      // Float50 -> double loses digits; only used for diagnostics.
      return Rational(to_double(v));
    }
  } else if constexpr (std::is_same_v<T, Float50>) {
    if constexpr (std::is_same_v<S, Rational>) {
      return Float50(v.get_num().get_str()) / Float50(v.get_den().get_str());
    } else {
      return Float50(v);
    }
  }
}

}  // namespace poncelet
