#pragma once

// Roots of a dense complex polynomial by Aberth-Ehrlich simultaneous
// iteration, with a companion-matrix eigenvalue fallback and a final Newton
// polish in extended precision.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "shortrange/errors.hpp"

namespace shortrange {

using cplx = std::complex<double>;

/// Horner evaluation; coefficients in ascending order of power.
template <typename T>
std::complex<T> polyval(std::span<const cplx> coeffs, std::complex<T> z) {
  std::complex<T> acc{0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + std::complex<T>(*it);
  return acc;
}

/// p(z) and p'(z) together.
template <typename T>
std::pair<std::complex<T>, std::complex<T>> polyval_deriv(std::span<const cplx> coeffs, std::complex<T> z) {
  std::complex<T> p{0}, dp{0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + std::complex<T>(*it);
  }
  return {p, dp};
}

enum class RootMethod { Aberth, Companion };

struct RootResult {
  std::vector<cplx> roots;
  RootMethod method{RootMethod::Aberth};
  int iterations{0};
};

struct RootOptions {
  int max_iterations{500};
  double tolerance{1e-14};  ///< on root movement, relative to max(1, |z|)
  bool allow_companion{true};
};

namespace detail {

inline std::vector<cplx> companion_roots(std::span<const cplx> c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw NumericError("polynomial_roots: companion eigenvalue solve failed");
  std::vector<cplx> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return r;
}

inline void newton_polish(std::span<const cplx> c, cplx& z) {
  using ld = long double;
  std::complex<ld> w(z.real(), z.imag());
  auto [p, dp] = polyval_deriv<ld>(c, w);
  for (int it = 0; it < 4 && dp != std::complex<ld>(0); ++it) {
    const std::complex<ld> next = w - p / dp;
    auto [pn, dpn] = polyval_deriv<ld>(c, next);
    if (!(std::abs(pn) < std::abs(p))) break;
    w = next;
    p = pn;
    dp = dpn;
  }
  z = cplx(static_cast<double>(w.real()), static_cast<double>(w.imag()));
}

}  // namespace detail

/// All roots of sum_j coeffs[j] z^j, with multiplicity. Exact zero roots
/// (vanishing low-order coefficients) are returned as exact zeros.
///
/// Aberth starts on a circle whose radius is the Fujiwara bound
/// 2 max_j |c_{n-j}/c_n|^{1/j}, rotated off the axes.
/// Throws DomainError if the polynomial is identically zero and NumericError
/// if neither Aberth nor the companion fallback produces finite roots.
inline RootResult polynomial_roots(std::span<const cplx> coeffs, const RootOptions& opt = {}) {
  std::vector<cplx> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == cplx(0.0)) c.pop_back();
  if (c.empty()) throw DomainError("polynomial_roots: polynomial is identically zero");
  for (const auto& a : c)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw DomainError("polynomial_roots: non-finite coefficient");

  RootResult result;
  std::size_t zeros = 0;
  while (zeros < c.size() - 1 && c[zeros] == cplx(0.0)) ++zeros;
  result.roots.assign(zeros, cplx(0.0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));

  const std::size_t n = c.size() - 1;
  if (n == 0) return result;
  if (n == 1) {
    result.roots.push_back(-c[0] / c[1]);
    return result;
  }

  double radius = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    double mag = std::abs(c[n - j] / c[n]);
    if (j == n) mag *= 0.5;
    radius = std::max(radius, std::pow(mag, 1.0 / static_cast<double>(j)));
  }
  radius *= 2.0;

  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.4);

  bool converged = false;
  int it = 0;
  for (; it < opt.max_iterations && !converged; ++it) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto [p, dp] = polyval_deriv<double>(c, z[i]);
      if (p == cplx(0.0)) continue;
      const cplx ratio = p / dp;
      cplx sum(0.0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      if (std::abs(step) > opt.tolerance * std::max(1.0, std::abs(z[i]))) converged = false;
    }
  }
  result.iterations = it;

  bool finite = std::all_of(z.begin(), z.end(), [](cplx w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); });
  if (!converged || !finite) {
    if (!opt.allow_companion) throw NumericError("polynomial_roots: Aberth iteration did not converge");
    z = detail::companion_roots(c);
    result.method = RootMethod::Companion;
    finite = std::all_of(z.begin(), z.end(), [](cplx w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); });
    if (!finite) throw NumericError("polynomial_roots: companion fallback produced non-finite roots");
  }
  for (auto& w : z) detail::newton_polish(c, w);
  result.roots.insert(result.roots.end(), z.begin(), z.end());
  return result;
}

}  // namespace shortrange
