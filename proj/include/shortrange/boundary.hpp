#pragma once

// Surface boundary condition on a sphere of radius lambda and the rescaled
// couplings that survive the small-radius limit.
//
// Sign convention: the condition is psi_l'(lambda) + C psi_l(lambda) = 0.
// C = 0 is Neumann, C = +inf is Dirichlet. With this sign the delta-shell
// strength 2v = -C - 1/lambda, the square-well relation
// ktilde cot(ktilde lambda) = -C and the rescaling C = l/lambda + chi lambda^{2l}
// all describe the same surface.

#include <cmath>
#include <limits>
#include <string>

#include "shortrange/errors.hpp"
#include "shortrange/specfun.hpp"

namespace shortrange {

struct RobinCondition {
  int l{0};
  double lambda{1.0};
  double c{0.0};  ///< +inf encodes Dirichlet

  bool dirichlet() const { return std::isinf(c); }
};

/// Partial wave l, cutoff radius lambda and the rescaled coupling chi
/// (units length^{-(2l+1)}).
struct Channel {
  int l{0};
  double lambda{1.0};
  double chi{0.0};
};

inline void validate(const RobinCondition& rc) {
  if (rc.l < 0) throw DomainError("RobinCondition: l must be >= 0");
  if (!(rc.lambda > 0.0) || !std::isfinite(rc.lambda)) throw DomainError("RobinCondition: lambda must be finite and > 0");
  if (std::isnan(rc.c)) throw DomainError("RobinCondition: C is NaN");
}

inline void validate(const Channel& ch) {
  if (ch.l < 0) throw DomainError("Channel: l must be >= 0");
  if (!(ch.lambda > 0.0) || !std::isfinite(ch.lambda)) throw DomainError("Channel: lambda must be finite and > 0");
  if (!std::isfinite(ch.chi)) throw DomainError("Channel: chi must be finite");
}

/// Builds a RobinCondition; any infinite c is stored as +inf (Dirichlet).
inline RobinCondition make_robin(int l, double lambda, double c) {
  RobinCondition rc{l, lambda, std::isinf(c) ? std::numeric_limits<double>::infinity() : c};
  validate(rc);
  return rc;
}

inline RobinCondition dirichlet(int l, double lambda) {
  return make_robin(l, lambda, std::numeric_limits<double>::infinity());
}

/// C = l/lambda + chi lambda^{2l}
inline RobinCondition robin_from_channel(const Channel& ch) {
  validate(ch);
  return {ch.l, ch.lambda, ch.l / ch.lambda + ch.chi * std::pow(ch.lambda, 2 * ch.l)};
}

/// Inverse of robin_from_channel. Exact up to the cancellation in C - l/lambda.
inline Channel channel_from_robin(const RobinCondition& rc) {
  validate(rc);
  if (rc.dirichlet()) throw DomainError("channel_from_robin: chi is undefined for a Dirichlet surface");
  return {rc.l, rc.lambda, (rc.c - rc.l / rc.lambda) / std::pow(rc.lambda, 2 * rc.l)};
}

namespace detail {
inline void check_series_momentum(const char* who, const Channel& ch, double k) {
  validate(ch);
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError(std::string(who) + ": k must be finite and >= 0");
  if (!(k * ch.lambda < 1.0))
    throw DomainError(std::string(who) + ": k*lambda = " + std::to_string(k * ch.lambda) +
                      " violates the low-energy bound k*lambda < 1");
}
}  // namespace detail

/// Momentum-dependent rescaled strength X_l(k, lambda):
///
///   X = (chi + k/lambda^{2l} * g'/g) * (1 - k lambda/(2l+1) * f'/f)^{-1} * g/f
///
/// with all ratios taken from the truncated fg_series at k*lambda.
/// X(k=0) = chi. Requires k*lambda < 1.
inline double x_strength(const Channel& ch, double k) {
  detail::check_series_momentum("x_strength", ch, k);
  const int l = ch.l;
  const double x = k * ch.lambda;
  const FgSeries s = fg_series(l, x);
  const double lead = ch.chi + k / std::pow(ch.lambda, 2 * l) * s.g_logderiv;
  const double denom = 1.0 - x / (2.0 * l + 1.0) * s.f_logderiv;
  return lead / denom * s.g_over_f;
}

/// Partial sums of the low-energy expansion of x_strength:
///   order 0: chi
///   order 1: + k^2 / ((2l-1) lambda^{2l-1})
///   order 2: + k^4 / ((2l-3)(2l-1) lambda^{2l-3})
inline double x_strength_expansion(const Channel& ch, double k, int order) {
  if (order < 0 || order > 2) throw DomainError("x_strength_expansion: order must be 0, 1 or 2");
  detail::check_series_momentum("x_strength_expansion", ch, k);
  const int l = ch.l;
  const double a = 2.0 * l - 1.0, b = 2.0 * l - 3.0;
  double x = ch.chi;
  if (order >= 1) x += k * k / (a * std::pow(ch.lambda, 2 * l - 1));
  if (order >= 2) x += std::pow(k, 4) / (b * a * std::pow(ch.lambda, 2 * l - 3));
  return x;
}

/// Strength v of a delta shell at r = lambda which, on top of psi(0) = 0,
/// produces the surface condition rc: 2v = -C - 1/lambda.
inline double delta_shell_strength(const RobinCondition& rc) {
  validate(rc);
  if (rc.dirichlet()) throw DomainError("delta_shell_strength: no finite shell realizes a Dirichlet surface");
  return 0.5 * (-rc.c - 1.0 / rc.lambda);
}

/// Surface parameter generated by a delta shell of strength v (small-lambda
/// linearization psi(lambda-) = lambda psi'(0)).
inline RobinCondition robin_from_delta_shell(int l, double lambda, double v) {
  return make_robin(l, lambda, -(1.0 / lambda + 2.0 * v));
}

struct SquareWell {
  double depth{0.0};   ///< U, with V = -U inside r < lambda
  double ktilde{0.0};  ///< sqrt(2U), the interior momentum at k = 0
};

/// Depth of the square well of radius lambda whose interior solution
/// (psi(0) = 0) matches rc: ktilde cot(ktilde lambda) = -C on the first branch
/// ktilde lambda in (0, pi). Requires C > -1/lambda.
///
/// The root is bracketed in t = ktilde lambda using
///   h(t) = t cos t + C lambda sin t,
/// which has the same zeros as t cot t + C lambda on (0, pi) but no poles.
inline SquareWell square_well_depth(const RobinCondition& rc) {
  validate(rc);
  if (rc.dirichlet()) throw DomainError("square_well_depth: Dirichlet surface needs an infinitely deep well");
  const double cl = rc.c * rc.lambda;
  if (!(cl > -1.0))
    throw DomainError("square_well_depth: no first-branch root, C = " + std::to_string(rc.c) +
                      " must exceed -1/lambda = " + std::to_string(-1.0 / rc.lambda));
  auto h = [cl](double t) { return t * std::cos(t) + cl * std::sin(t); };
  // h > 0 just above 0 (slope 1 + C lambda) and h(pi) = -pi.
  double lo = 1e-3, hi = M_PI;
  double hlo = h(lo), hhi = h(hi);
  while (hlo <= 0.0 && lo > 1e-300) {  // only when 1 + C lambda is tiny
    lo *= 0.5;
    hlo = h(lo);
  }
  if (hlo <= 0.0) throw NumericError("square_well_depth: could not bracket the root");
  // bisection with a regula-falsi (Illinois) step when it stays inside the bracket
  int side = 0;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    double t = (lo * hhi - hi * hlo) / (hhi - hlo);
    if (!(t > lo && t < hi) || it % 3 == 2) t = 0.5 * (lo + hi);
    const double ht = h(t);
    if (ht == 0.0) {
      lo = hi = t;
      break;
    }
    if ((ht > 0.0) == (hlo > 0.0)) {
      lo = t;
      hlo = ht;
      if (side == -1) hhi *= 0.5;
      side = -1;
    } else {
      hi = t;
      hhi = ht;
      if (side == 1) hlo *= 0.5;
      side = 1;
    }
  }
  const double t = 0.5 * (lo + hi);
  const double kt = t / rc.lambda;
  return {0.5 * kt * kt, kt};
}

/// Surface parameter produced by a square well with interior momentum ktilde:
/// C = -ktilde cot(ktilde lambda).
inline RobinCondition robin_from_square_well(int l, double lambda, double ktilde) {
  return make_robin(l, lambda, -ktilde / std::tan(ktilde * lambda));
}

}  // namespace shortrange
