#pragma once

// Riccati-Bessel functions u_l(x) = x j_l(x), v_l(x) = x n_l(x) with their
// x-derivatives, double factorials, and the truncated small-argument series
// of the normalized free solutions.
//
//   x j_l(x) ~  x^{l+1} / (2l+1)!! * f_l(x)
//   x n_l(x) ~ -(2l-1)!! / x^l     * g_l(x)        (x -> 0)

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "shortrange/errors.hpp"

namespace shortrange {

/// Value and d/dx of a Riccati function at x.
struct RiccatiEval {
  double x{0.0};
  double value{0.0};
  double derivative{0.0};
};

/// n!! with (-1)!! = (0)!! = 1. Throws DomainError for n < -1 and for
/// n > 33, where the result no longer fits in 64 bits.
constexpr std::uint64_t double_factorial(int n) {
  if (n < -1) throw DomainError("double_factorial: n must be >= -1, got " + std::to_string(n));
  if (n > 33) throw DomainError("double_factorial: n = " + std::to_string(n) + " overflows 64 bits");
  std::uint64_t r = 1;
  for (int k = n; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

/// (2l-1)!! as a double; the recurring normalization constant of channel l.
inline double odd_double_factorial(int l) { return static_cast<double>(double_factorial(2 * l - 1)); }

namespace detail {

inline void check_riccati_args(const char* who, int l, double x) {
  if (l < 0) throw DomainError(std::string(who) + ": l must be >= 0, got " + std::to_string(l));
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(who) + ": x must be finite and > 0, got " + std::to_string(x));
}

// Power series of x j_l(x) and its derivative. Used for x < 2, where the
// alternating terms never exceed a few times the sum.
inline RiccatiEval riccati_bessel_series(int l, double x) {
  const double x2 = x * x;
  // leading coefficient x^{l+1} / (2l+1)!!, built incrementally to avoid
  // overflow of the integer double factorial at large l
  double lead = x;
  for (int k = 1; k <= l; ++k) lead *= x / (2.0 * k + 1.0);
  double term = 1.0;
  double sum = 1.0;
  double dsum = static_cast<double>(l + 1);
  for (int k = 1; k < 60; ++k) {
    term *= -x2 / (2.0 * k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    dsum += term * (l + 1 + 2 * k);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return {x, lead * sum, lead / x * dsum};
}

// Miller's downward recurrence for j_0..j_l, normalized against whichever of
// the closed forms j_0, j_1 is larger in magnitude at x.
inline std::vector<double> spherical_bessel_downward(int l, double x) {
  const int start = l + static_cast<int>(x) + 40;
  std::vector<double> j(static_cast<std::size_t>(l) + 2, 0.0);
  double upper = 0.0;
  double current = 1e-30;
  for (int n = start; n >= 0; --n) {
    // j_{n-1} = (2n+1)/x j_n - j_{n+1}
    const double lower = (2.0 * n + 1.0) / x * current - upper;
    if (n <= l + 1) j[static_cast<std::size_t>(n)] = current;
    upper = current;
    current = lower;
    if (std::abs(current) > 1e250) {
      upper *= 1e-250;
      current *= 1e-250;
      for (auto& v : j) v *= 1e-250;
    }
  }
  const double s = std::sin(x), c = std::cos(x);
  const double j0 = s / x;
  const double j1 = s / (x * x) - c / x;
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / j[0] : j1 / j[1];
  for (auto& v : j) v *= scale;
  j.resize(static_cast<std::size_t>(l) + 1);
  return j;
}

}  // namespace detail

/// u_l(x) = x j_l(x) and u_l'(x). Relative accuracy ~1e-13 for l <= 10, x <= 50.
inline RiccatiEval riccati_bessel(int l, double x) {
  detail::check_riccati_args("riccati_bessel", l, x);
  if (x < 2.0) return detail::riccati_bessel_series(l, x);
  if (l == 0) return {x, std::sin(x), std::cos(x)};
  const auto j = detail::spherical_bessel_downward(l, x);
  const double jl = j[static_cast<std::size_t>(l)];
  const double jlm1 = j[static_cast<std::size_t>(l - 1)];
  // u_l' = u_{l-1} - (l/x) u_l
  return {x, x * jl, x * jlm1 - l * jl};
}

/// v_l(x) = x n_l(x) and v_l'(x), by upward recurrence (n_l is the dominant
/// solution, so this is stable for all x > 0).
inline RiccatiEval riccati_neumann(int l, double x) {
  detail::check_riccati_args("riccati_neumann", l, x);
  const double s = std::sin(x), c = std::cos(x);
  double prev = -c;              // v_0
  if (l == 0) return {x, prev, s};
  double cur = -c / x - s;       // v_1
  for (int n = 1; n < l; ++n) {
    const double next = (2.0 * n + 1.0) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return {x, cur, prev - l * cur / x};
}

/// Truncated small-argument series of the normalized free solutions and
/// their ratios. Every entry is cut at the order listed:
///   f, g, g_over_f       through x^4
///   f_logderiv = f'/f    through x^3
///   g_logderiv = g'/g    through x^3
struct FgSeries {
  double f{1.0};
  double g{1.0};
  double f_logderiv{0.0};
  double g_logderiv{0.0};
  double g_over_f{1.0};
};

/// Throws DomainError for |x| >= 1 (outside the regime the truncation is
/// meant for) or l < 0.
inline FgSeries fg_series(int l, double x) {
  if (l < 0) throw DomainError("fg_series: l must be >= 0, got " + std::to_string(l));
  if (!(std::abs(x) < 1.0))
    throw DomainError("fg_series: |x| must be < 1 for the truncated series, got " + std::to_string(x));
  const double L = l;
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  // (2l-1) and (2l-3) are odd, hence never zero; for l <= 1 they are negative
  // and the sign is part of the series.
  const double a = 2 * L - 1, b = 2 * L - 3, p = 2 * L + 3, q = 2 * L + 5;
  FgSeries s;
  s.f = 1.0 - x2 / (2 * p) + x4 / (8 * q * p);
  s.g = 1.0 + x2 / (2 * a) + x4 / (8 * b * a);
  s.g_logderiv = x / a + x3 / (a * a * b);
  s.f_logderiv = -x / p - x3 / (p * p * q);
  s.g_over_f = 1.0 + (2 * L + 1) * x2 / (a * p) + (L + 3) * (2 * L + 1) * x4 / (b * p * p * q);
  return s;
}

}  // namespace shortrange
