#pragma once

// Poles of the two-parameter S-matrix in the complex momentum plane.
// They are the roots of
//
//   P(k) = i/(2l-1)!!^2 k^{2l+1} + k^2/((2l-1) lambda^{2l-1}) + chi,
//
// a polynomial of degree 2l+1 (degree 2 for l = 0, where the middle term is
// -lambda k^2 and dominates).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>
#include <vector>

#include "shortrange/boundary.hpp"
#include "shortrange/errors.hpp"
#include "shortrange/polyroots.hpp"
#include "shortrange/specfun.hpp"

namespace shortrange {

enum class PoleKind { Bound, Resonance, Other };

inline std::string_view to_string(PoleKind k) {
  switch (k) {
    case PoleKind::Bound: return "bound";
    case PoleKind::Resonance: return "resonance";
    case PoleKind::Other: return "other";
  }
  return "other";
}

/// Relative distance from the imaginary axis below which a pole counts as on it.
inline constexpr double kAxisTolerance = 1e-8;

struct PoleRecord {
  cplx k_pole;
  PoleKind kind{PoleKind::Other};
  double residual{0.0};        ///< |P(k_pole)|
  double backward_error{0.0};  ///< |P(k_pole)| / sum_j |c_j| |k_pole|^j
};

/// Bound: on the positive imaginary axis. Resonance: fourth quadrant, closer
/// to the real axis than to the anti-diagonal. Everything else (including
/// k = 0) is Other.
inline PoleKind classify_pole(cplx k) {
  const double re = k.real(), im = k.imag();
  if (std::abs(re) < kAxisTolerance * std::abs(k) && im > 0.0) return PoleKind::Bound;
  if (re > 0.0 && im < 0.0 && -re < im) return PoleKind::Resonance;
  return PoleKind::Other;
}

/// Ascending coefficients of P(k).
inline std::vector<cplx> pole_polynomial(const Channel& ch) {
  validate(ch);
  const double d = odd_double_factorial(ch.l);
  const std::size_t degree = std::max<std::size_t>(2 * static_cast<std::size_t>(ch.l) + 1, 2);
  std::vector<cplx> c(degree + 1, cplx(0.0));
  c[0] += ch.chi;
  c[2] += 1.0 / ((2.0 * ch.l - 1.0) * std::pow(ch.lambda, 2 * ch.l - 1));
  c[2 * static_cast<std::size_t>(ch.l) + 1] += cplx(0.0, 1.0 / (d * d));
  return c;
}

/// P(k) with the k^2 term dropped: the regime of a large cutoff factor
/// lambda^{2l-1}, where the poles are known in closed form.
inline std::vector<cplx> pole_polynomial_asymptotic(int l, double chi) {
  if (l < 0) throw DomainError("pole_polynomial_asymptotic: l must be >= 0");
  const double d = odd_double_factorial(l);
  std::vector<cplx> c(2 * static_cast<std::size_t>(l) + 2, cplx(0.0));
  c[0] = chi;
  c.back() = cplx(0.0, 1.0 / (d * d));
  return c;
}

inline cplx pole_residual(const Channel& ch, cplx k) {
  const auto c = pole_polynomial(ch);
  const auto r = polyval<long double>(c, std::complex<long double>(k.real(), k.imag()));
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

namespace detail {
inline PoleRecord make_record(std::span<const cplx> coeffs, cplx k) {
  using ld = long double;
  const std::complex<ld> kl(k.real(), k.imag());
  const ld res = std::abs(polyval<ld>(coeffs, kl));
  ld scale = 0;
  ld pw = 1;
  for (const auto& a : coeffs) {
    scale += std::abs(std::complex<ld>(a)) * pw;
    pw *= std::abs(kl);
  }
  PoleRecord rec;
  rec.k_pole = k;
  rec.kind = classify_pole(k);
  rec.residual = static_cast<double>(res);
  rec.backward_error = scale > 0 ? static_cast<double>(res / scale) : 0.0;
  return rec;
}

inline void sort_poles(std::vector<PoleRecord>& poles) {
  std::sort(poles.begin(), poles.end(), [](const PoleRecord& a, const PoleRecord& b) {
    if (a.k_pole.real() != b.k_pole.real()) return a.k_pole.real() > b.k_pole.real();
    return a.k_pole.imag() > b.k_pole.imag();
  });
}
}  // namespace detail

/// All roots of the pole polynomial, sorted by descending real part.
/// chi = 0 yields an exact double root at k = 0 for l >= 1.
inline std::vector<PoleRecord> find_poles(const Channel& ch, const RootOptions& opt = {}) {
  const auto coeffs = pole_polynomial(ch);
  const RootResult rr = polynomial_roots(coeffs, opt);
  std::vector<PoleRecord> poles;
  poles.reserve(rr.roots.size());
  for (const auto& k : rr.roots) poles.push_back(detail::make_record(coeffs, k));
  detail::sort_poles(poles);
  return poles;
}

/// Roots of the polynomial with the k^2 term dropped, for any l and chi.
inline std::vector<PoleRecord> find_poles_asymptotic(int l, double chi, const RootOptions& opt = {}) {
  const auto coeffs = pole_polynomial_asymptotic(l, chi);
  const RootResult rr = polynomial_roots(coeffs, opt);
  std::vector<PoleRecord> poles;
  for (const auto& k : rr.roots) poles.push_back(detail::make_record(coeffs, k));
  detail::sort_poles(poles);
  return poles;
}

namespace detail {
/// (2l-1)!!^{2/(2l+1)} chi^{1/(2l+1)} with the real odd root for chi < 0.
inline double pole_magnitude(int l, double chi) {
  const double n = 2.0 * l + 1.0;
  const double d = odd_double_factorial(l);
  return std::pow(d, 2.0 / n) * std::copysign(std::pow(std::abs(chi), 1.0 / n), chi);
}
}  // namespace detail

/// Closed-form poles when the k^2 term is negligible:
///   k_p = (2l-1)!!^{2/(2l+1)} chi^{1/(2l+1)} exp(i pi (4p+1)/(4l+2)),  p = 1..2l+1.
/// chi^{1/(2l+1)} is the real odd root, negative for chi < 0.
inline std::vector<cplx> asymptotic_poles(int l, double chi) {
  if (l < 0) throw DomainError("asymptotic_poles: l must be >= 0");
  if (chi == 0.0 || !std::isfinite(chi)) throw DomainError("asymptotic_poles: chi must be finite and nonzero");
  const double mag = detail::pole_magnitude(l, chi);
  std::vector<cplx> out;
  for (int p = 1; p <= 2 * l + 1; ++p)
    out.push_back(mag * std::polar(1.0, std::numbers::pi * (4.0 * p + 1.0) / (4.0 * l + 2.0)));
  return out;
}

/// Closed-form resonance pole (2l-1)!!^{2/(2l+1)} chi^{1/(2l+1)} exp(i pi/(4l+2)).
/// Note this lies in the upper half plane for chi > 0; the exact roots of
/// the pole polynomial should be preferred for the physical resonance.
inline cplx asymptotic_resonance_pole(int l, double chi) {
  if (l < 1) throw DomainError("asymptotic_resonance_pole: requires l >= 1");
  if (chi == 0.0 || !std::isfinite(chi)) throw DomainError("asymptotic_resonance_pole: chi must be finite and nonzero");
  return detail::pole_magnitude(l, chi) * std::polar(1.0, std::numbers::pi / (4.0 * l + 2.0));
}

/// Real-axis resonance position
///   (2l-1)!!^{2/(2l+1)} |chi|^{1/(2l+1)} cos(pi/(4l+2)).
inline double resonance_momentum(int l, double chi) {
  if (l < 1) throw DomainError("resonance_momentum: requires l >= 1");
  if (!std::isfinite(chi)) throw DomainError("resonance_momentum: chi must be finite");
  return std::abs(detail::pole_magnitude(l, chi)) * std::cos(std::numbers::pi / (4.0 * l + 2.0));
}

}  // namespace shortrange
