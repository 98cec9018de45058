#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "shortrange/poles.hpp"
#include "shortrange/scattering.hpp"

using namespace shortrange;

namespace {
constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

const PoleRecord* nearest(const std::vector<PoleRecord>& poles, cplx target) {
  const PoleRecord* best = nullptr;
  for (const auto& p : poles)
    if (!best || std::abs(p.k_pole - target) < std::abs(best->k_pole - target)) best = &p;
  return best;
}
}  // namespace

TEST(PoleResidual, Examples) {
  EXPECT_EQ(pole_residual({1, 0.1, 0.0}, 0.0), cplx(0.0));
  EXPECT_EQ(pole_residual({3, 0.4, 0.0}, 0.0), cplx(0.0));
  // l = 0: i k - lambda k^2 + chi at k = 3i is 9 lambda
  EXPECT_NEAR(std::abs(pole_residual({0, 0.25, 3.0}, 3.0 * I) - 9.0 * 0.25), 0.0, 1e-14);
  // the rounded reference value 1.5 - 0.12i is close to, but not on, the root
  const double r = std::abs(pole_residual({1, 0.1, -25.0}, {1.5, -0.12}));
  EXPECT_GT(r, 0.0);
  EXPECT_LT(r, 2.0);
}

TEST(PolePolynomial, Shape) {
  EXPECT_EQ(pole_polynomial({0, 0.1, 1.0}).size(), 3u);
  EXPECT_EQ(pole_polynomial({1, 0.1, 1.0}).size(), 4u);
  EXPECT_EQ(pole_polynomial({4, 0.1, 1.0}).size(), 10u);
  const auto c = pole_polynomial({1, 0.1, -25.0});
  EXPECT_EQ(c[0], cplx(-25.0));
  EXPECT_EQ(c[1], cplx(0.0));
  EXPECT_NEAR(c[2].real(), 10.0, 1e-14);
  EXPECT_EQ(c[3], I);
  const auto c0 = pole_polynomial({0, 0.25, 2.0});
  EXPECT_EQ(c0[1], I);
  EXPECT_EQ(c0[2], cplx(-0.25));
}

TEST(FindPoles, PWaveResonances) {
  const auto a = find_poles({1, 0.1, -25.0});
  ASSERT_EQ(a.size(), 3u);
  const auto* ra = nearest(a, {oracle::pole_fig1a_re, oracle::pole_fig1a_im});
  EXPECT_NEAR(ra->k_pole.real(), oracle::pole_fig1a_re, 1e-12);
  EXPECT_NEAR(ra->k_pole.imag(), oracle::pole_fig1a_im, 1e-12);
  EXPECT_EQ(ra->kind, PoleKind::Resonance);

  const auto b = find_poles({1, 0.1, -0.1});
  const auto* rb = nearest(b, {0.10, -0.0005});
  EXPECT_NEAR(rb->k_pole.real(), oracle::pole_fig1b_re, 1e-13);
  EXPECT_NEAR(rb->k_pole.imag(), oracle::pole_fig1b_im, 1e-13);
  EXPECT_NEAR(rb->k_pole.real(), 0.10, 0.01);
  EXPECT_NEAR(rb->k_pole.imag(), -0.0005, 5e-4);
  EXPECT_EQ(rb->kind, PoleKind::Resonance);
}

TEST(FindPoles, SWaveBoundState) {
  // -lambda k^2 + i k + chi = 0  =>  k = (i - sqrt(-1 + 4 lambda chi)) / (2 lambda) ... take the root near i chi
  const double lam = 0.001, chi = 1.0;
  const cplx disc = std::sqrt(cplx(-1.0 + 4.0 * lam * chi));
  const cplx exact = (-I + disc) / (-2.0 * lam);
  const auto poles = find_poles({0, lam, chi});
  ASSERT_EQ(poles.size(), 2u);
  const auto* b = nearest(poles, I * chi);
  EXPECT_LT(std::abs(b->k_pole - exact), 1e-12);
  EXPECT_NEAR(b->k_pole.imag(), 1.0, 2e-3);
  EXPECT_EQ(b->kind, PoleKind::Bound);
}

TEST(FindPoles, ZeroCouplingDoubleRoot) {
  for (int l = 1; l <= 4; ++l) {
    const auto poles = find_poles({l, 0.2, 0.0});
    ASSERT_EQ(poles.size(), static_cast<std::size_t>(2 * l + 1));
    int zeros = 0;
    for (const auto& p : poles) zeros += std::abs(p.k_pole) == 0.0;
    EXPECT_GE(zeros, 2) << "l=" << l;
  }
  // l = 0: single zero root plus k = i/lambda
  const auto s = find_poles({0, 0.5, 0.0});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_LT(std::abs(nearest(s, 2.0 * I)->k_pole - 2.0 * I), 1e-14);
}

TEST(FindPoles, ResidualAndSymmetryProperties) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> ld(0, 4);
  std::uniform_real_distribution<double> lam(0.05, 0.5), chi(-50.0, 50.0);
  for (int i = 0; i < 300; ++i) {
    const Channel ch{ld(rng), lam(rng), chi(rng)};
    const auto poles = find_poles(ch);
    ASSERT_EQ(poles.size(), static_cast<std::size_t>(std::max(2 * ch.l + 1, 2)));
    for (const auto& p : poles) {
      EXPECT_LT(p.backward_error, 1e-14) << i;
      // mirror partner -k* must also be a root
      const auto* m = nearest(poles, -std::conj(p.k_pole));
      EXPECT_LT(std::abs(m->k_pole + std::conj(p.k_pole)), 1e-9 * std::max(1.0, std::abs(p.k_pole))) << i;
    }
  }
}

TEST(FindPoles, AbsoluteResidualForModerateChannels) {
  for (const Channel ch : {Channel{1, 0.1, -25.0}, Channel{1, 0.1, -0.1}, Channel{1, 0.1, 25.0}, Channel{0, 0.3, 2.0},
                           Channel{2, 0.5, -3.0}, Channel{3, 0.4, 10.0}}) {
    for (const auto& p : find_poles(ch)) EXPECT_LT(p.residual, 1e-10 * std::max(1.0, std::abs(ch.chi))) << ch.l;
  }
}

TEST(FindPoles, ResonanceMatchesPhaseShiftCrossing) {
  for (double chi : {-25.0, -0.1}) {
    const Channel ch{1, 0.1, chi};
    const auto poles = find_poles(ch);
    const PoleRecord* res = nullptr;
    for (const auto& p : poles)
      if (p.kind == PoleKind::Resonance) res = &p;
    ASSERT_NE(res, nullptr);
    // effective-range phase shift crosses pi/2 where chi + k^2/lambda = 0
    const double k_cross = std::sqrt(-chi * ch.lambda);
    EXPECT_NEAR(std::remainder(phase_shift_eff(ch, k_cross) - pi / 2, pi), 0.0, 1e-9);
    EXPECT_LT(std::abs(k_cross - res->k_pole.real()), 2 * std::abs(res->k_pole.imag())) << chi;
  }
}

TEST(AsymptoticPoles, SWave) {
  const auto p = asymptotic_poles(0, 2.5);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_LT(std::abs(p[0] - 2.5 * I), 1e-14);
  EXPECT_EQ(classify_pole(p[0]), PoleKind::Bound);
}

TEST(AsymptoticPoles, AreRootsOfDroppedPolynomial) {
  for (int l = 0; l <= 5; ++l)
    for (double chi : {-7.0, -1.0, 0.3, 25.0}) {
      const auto roots = asymptotic_poles(l, chi);
      ASSERT_EQ(roots.size(), static_cast<std::size_t>(2 * l + 1));
      const auto c = pole_polynomial_asymptotic(l, chi);
      for (const auto& k : roots) EXPECT_LT(std::abs(polyval<double>(c, k)), 1e-12 * std::max(1.0, std::abs(chi))) << l << " " << chi;
    }
}

TEST(AsymptoticPoles, PWaveNegativeCoupling) {
  const double chi = -8.0;
  const auto roots = asymptotic_poles(1, chi);
  int found = 0;
  for (const auto& k : roots)
    if (std::abs(std::arg(k) + pi / 6) < 1e-12) {
      ++found;
      EXPECT_NEAR(std::abs(k), 2.0, 1e-13);
    }
  EXPECT_EQ(found, 1);
  EXPECT_THROW(asymptotic_poles(1, 0.0), DomainError);
  EXPECT_THROW(asymptotic_poles(-1, 1.0), DomainError);
}

TEST(AsymptoticPoles, ResonancePoleFormula) {
  const cplx k = asymptotic_resonance_pole(1, 1.0);
  EXPECT_NEAR(std::arg(k), pi / 6, 1e-14);
  EXPECT_NEAR(std::abs(k), 1.0, 1e-14);
  EXPECT_NEAR(k.real(), resonance_momentum(1, 1.0), 1e-14);
  EXPECT_THROW(asymptotic_resonance_pole(0, 1.0), DomainError);
}

TEST(ResonanceMomentum, Examples) {
  EXPECT_NEAR(resonance_momentum(1, 25.0), std::cbrt(25.0) * std::cos(pi / 6), 1e-13);
  EXPECT_NEAR(resonance_momentum(1, 25.0), 2.5323, 1e-4);
  EXPECT_NEAR(resonance_momentum(1, -25.0), 2.5323, 1e-4);
  EXPECT_NEAR(resonance_momentum(1, 1.0), 0.8660, 1e-4);
  // (2l-1)!!^{2/(2l+1)} for l = 2 is 3^{2/5}
  EXPECT_NEAR(resonance_momentum(2, 1.0), std::pow(3.0, 0.4) * std::cos(pi / 10), 1e-13);
  double prev = 0.0;
  for (int l = 1; l <= 10; ++l) {
    const double c = std::cos(pi / (4.0 * l + 2.0));
    EXPECT_GT(c, prev);
    prev = c;
  }
  EXPECT_GT(prev, 0.997);
  EXPECT_THROW(resonance_momentum(0, 1.0), DomainError);
}

TEST(ClassifyPole, Examples) {
  EXPECT_EQ(classify_pole({0.0, 2.0}), PoleKind::Bound);
  EXPECT_EQ(classify_pole({1.5, -0.12}), PoleKind::Resonance);
  EXPECT_EQ(classify_pole({-1.0, -3.0}), PoleKind::Other);
  EXPECT_EQ(classify_pole({0.0, -2.0}), PoleKind::Other);
  EXPECT_EQ(classify_pole({1.0, -2.0}), PoleKind::Other);
  EXPECT_EQ(classify_pole({1e-12, 5.0}), PoleKind::Bound);
  EXPECT_EQ(classify_pole({1e-3, 5.0}), PoleKind::Other);
  EXPECT_EQ(classify_pole(0.0), PoleKind::Other);
  EXPECT_EQ(to_string(PoleKind::Resonance), "resonance");
}

TEST(BoundStateParity, DroppedSecondTermPolynomial) {
  for (int l = 0; l <= 4; ++l)
    for (double chi : {1.0, -1.0}) {
      int bound = 0;
      for (const auto& p : find_poles_asymptotic(l, chi)) bound += p.kind == PoleKind::Bound;
      const bool expected = (chi > 0 && l % 2 == 0) || (chi < 0 && l % 2 == 1);
      EXPECT_EQ(bound, expected ? 1 : 0) << "l=" << l << " chi=" << chi;
    }
}
