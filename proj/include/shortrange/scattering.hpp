#pragma once

// Single-channel phase shifts and S-matrix elements.
//
// Outside r = lambda the radial solution is psi = a u_l(kr) + b v_l(kr) with
// u, v the Riccati-Bessel/Neumann functions; asymptotically
// psi ~ a sin(kr - l pi/2) - b cos(kr - l pi/2), so cot(delta) = -a/b.
//
// Three phase shifts are provided:
//   full  surface condition applied to the exact Riccati functions
//   eff   two-parameter formula  -k^{2l+1}/(2l-1)!!^2 cot(delta) = chi + k^2/((2l-1) lambda^{2l-1})
//   zero  its first term only    -k^{2l+1}/(2l-1)!!^2 cot(delta) = chi

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "shortrange/boundary.hpp"
#include "shortrange/errors.hpp"
#include "shortrange/specfun.hpp"

namespace shortrange {

/// a/b kept as a numerator/denominator pair so that cot(delta) = 0 and
/// cot(delta) = inf are both representable.
struct ProjectiveRatio {
  double num{0.0};
  double den{1.0};

  /// num/den; +-inf at den = 0.
  double value() const {
    if (den == 0.0) return num >= 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    return num / den;
  }
};

/// Maps an angle onto (-pi/2, pi/2].
inline double reduce_half_branch(double delta) {
  constexpr double pi = std::numbers::pi;
  delta = std::remainder(delta, pi);  // [-pi/2, pi/2]
  if (delta <= -pi / 2) delta += pi;
  return delta;
}

/// tan(delta) = t_num / t_den on (-pi/2, pi/2]. Uses atan of the quotient
/// rather than atan2, which would return values near +-pi for small negative
/// tangents and lose them to rounding on reduction.
inline double phase_from_tangent(double t_num, double t_den) {
  if (t_den == 0.0) return std::numbers::pi / 2;
  return reduce_half_branch(std::atan(t_num / t_den));
}

namespace detail {
inline void check_momentum(const char* who, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError(std::string(who) + ": k must be finite and > 0");
}
}  // namespace detail

/// a/b from psi'(lambda) + C psi(lambda) = 0 with psi = a u + b v:
///   a/b = -(k v' + C v) / (k u' + C u)       (derivatives d/dx, x = k lambda)
///   a/b = -v / u                             (Dirichlet)
inline ProjectiveRatio ratio_ab_projective(const RobinCondition& rc, double k) {
  validate(rc);
  detail::check_momentum("ratio_ab_full", k);
  const double x = k * rc.lambda;
  const RiccatiEval u = riccati_bessel(rc.l, x);
  const RiccatiEval v = riccati_neumann(rc.l, x);
  if (rc.dirichlet()) return {-v.value, u.value};
  // radial derivative is k d/dx
  return {-(k * v.derivative + rc.c * v.value), k * u.derivative + rc.c * u.value};
}

inline double ratio_ab_full(const RobinCondition& rc, double k) { return ratio_ab_projective(rc, k).value(); }

/// Pointwise full phase shift on (-pi/2, pi/2]; cot(delta) = -a/b.
inline double phase_shift_full(const RobinCondition& rc, double k) {
  const ProjectiveRatio r = ratio_ab_projective(rc, k);
  // tan(delta) = -b/a = den / (-num)
  return phase_from_tangent(r.den, -r.num);
}

/// S = (cot delta + i)/(cot delta - i) evaluated from the projective ratio,
/// so it stays finite at resonance.
inline std::complex<double> s_matrix_full(const RobinCondition& rc, double k) {
  const ProjectiveRatio r = ratio_ab_projective(rc, k);
  // cot delta = -num/den; multiply through by den
  const std::complex<double> top(-r.num, r.den);
  const std::complex<double> bottom(-r.num, -r.den);
  return top / bottom;
}

/// chi + k^2 / ((2l-1) lambda^{2l-1}); for l = 0 the second term is -lambda k^2.
inline double effective_range_strength(const Channel& ch, double k) {
  return ch.chi + k * k / ((2.0 * ch.l - 1.0) * std::pow(ch.lambda, 2 * ch.l - 1));
}

/// Rescaled strength reconstructed from the full solution,
/// X = -k^{2l+1} cot(delta_full) / (2l-1)!!^2. Finite unless delta_full = 0 mod pi.
inline double x_strength_full(const RobinCondition& rc, double k) {
  const ProjectiveRatio r = ratio_ab_projective(rc, k);
  const double d = odd_double_factorial(rc.l);
  return std::pow(k, 2 * rc.l + 1) * r.value() / (d * d);
}

/// Two-parameter shape-independent phase shift. Requires k*lambda < 1.
inline double phase_shift_eff(const Channel& ch, double k) {
  validate(ch);
  detail::check_momentum("phase_shift_eff", k);
  if (!(k * ch.lambda < 1.0)) throw DomainError("phase_shift_eff: requires k*lambda < 1");
  const double d = odd_double_factorial(ch.l);
  // tan(delta) = k^{2l+1} / (-(2l-1)!!^2 X)
  return phase_from_tangent(std::pow(k, 2 * ch.l + 1), -d * d * effective_range_strength(ch, k));
}

/// Zero-range phase shift from chi alone.
inline double phase_shift_zero(const Channel& ch, double k) {
  validate(ch);
  detail::check_momentum("phase_shift_zero", k);
  const double d = odd_double_factorial(ch.l);
  return phase_from_tangent(std::pow(k, 2 * ch.l + 1), -d * d * ch.chi);
}

/// Two-parameter S-matrix,
///   S = -(k^{2l+1} + i D X) / (k^{2l+1} - i D X),  D = (2l-1)!!^2, X as in phase_shift_eff.
inline std::complex<double> s_matrix_eff(const Channel& ch, double k) {
  validate(ch);
  detail::check_momentum("s_matrix_eff", k);
  if (!(k * ch.lambda < 1.0)) throw DomainError("s_matrix_eff: requires k*lambda < 1");
  const double d = odd_double_factorial(ch.l);
  const double kn = std::pow(k, 2 * ch.l + 1);
  const double dx = d * d * effective_range_strength(ch, k);
  return -std::complex<double>(kn, dx) / std::complex<double>(kn, -dx);
}

inline std::complex<double> s_matrix_from_delta(double delta) { return std::polar(1.0, 2.0 * delta); }

/// Minimal-jump continuation: shifts each entry by a multiple of pi so it lies
/// within pi/2 of its predecessor. NaN entries are skipped and do not break
/// the chain.
inline void unwrap_phases(std::span<double> deltas) {
  constexpr double pi = std::numbers::pi;
  std::optional<double> prev;
  for (double& d : deltas) {
    if (std::isnan(d)) continue;
    if (prev) d += pi * std::round((*prev - d) / pi);
    prev = d;
  }
}

/// One momentum sample of a scan. Missing phase shifts are NaN.
struct PhaseShiftPoint {
  double k{0.0};
  double delta_full{std::numeric_limits<double>::quiet_NaN()};
  double delta_eff{std::numeric_limits<double>::quiet_NaN()};
  double delta_zero{std::numeric_limits<double>::quiet_NaN()};
  double ratio_ab{std::numeric_limits<double>::quiet_NaN()};
};

struct ScanSelection {
  bool full{true};
  bool eff{true};
  bool zero{true};
  /// eff/zero are left as NaN beyond this k*lambda
  double series_limit{0.9};
};

/// Phase shifts over a momentum grid, each column unwrapped independently.
/// `channel` may be empty for a Dirichlet surface; eff and zero are then skipped.
inline std::vector<PhaseShiftPoint> scan_phase_shifts(const RobinCondition& rc, const std::optional<Channel>& channel,
                                                      std::span<const double> ks, const ScanSelection& sel = {}) {
  std::vector<PhaseShiftPoint> pts;
  pts.reserve(ks.size());
  for (double k : ks) {
    PhaseShiftPoint p;
    p.k = k;
    if (sel.full) {
      p.ratio_ab = ratio_ab_full(rc, k);
      p.delta_full = phase_shift_full(rc, k);
    }
    if (channel && k * channel->lambda <= sel.series_limit) {
      if (sel.eff) p.delta_eff = phase_shift_eff(*channel, k);
      if (sel.zero) p.delta_zero = phase_shift_zero(*channel, k);
    }
    pts.push_back(p);
  }
  auto unwrap_column = [&pts](double PhaseShiftPoint::*member) {
    std::vector<double> col;
    col.reserve(pts.size());
    for (const auto& p : pts) col.push_back(p.*member);
    unwrap_phases(col);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].*member = col[i];
  };
  unwrap_column(&PhaseShiftPoint::delta_full);
  unwrap_column(&PhaseShiftPoint::delta_eff);
  unwrap_column(&PhaseShiftPoint::delta_zero);
  return pts;
}

/// n points from kmin to kmax inclusive.
inline std::vector<double> uniform_grid(double kmin, double kmax, int n) {
  if (n < 2) throw DomainError("uniform_grid: need at least 2 points");
  std::vector<double> ks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ks[static_cast<std::size_t>(i)] = kmin + (kmax - kmin) * i / (n - 1);
  ks.back() = kmax;
  return ks;
}

}  // namespace shortrange
