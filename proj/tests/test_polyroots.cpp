#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "shortrange/polyroots.hpp"

using namespace shortrange;

namespace {

// ascending coefficients of prod (z - r_i)
std::vector<cplx> from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const auto& r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

// greedy nearest matching; returns the worst distance
double match_roots(std::vector<cplx> got, const std::vector<cplx>& want) {
  double worst = 0.0;
  for (const auto& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&w](const cplx& a, const cplx& b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST(PolynomialRoots, RealCubic) {
  const std::vector<cplx> want{1.0, 2.0, 3.0};
  const auto r = polynomial_roots(from_roots(want));
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_LT(match_roots(r.roots, want), 1e-13);
  EXPECT_EQ(r.method, RootMethod::Aberth);
}

TEST(PolynomialRoots, ComplexCoefficients) {
  const std::vector<cplx> want{{1.5, -0.12}, {-1.5, -0.12}, {0.0, 10.0}, {0.3, 0.3}};
  EXPECT_LT(match_roots(polynomial_roots(from_roots(want)).roots, want), 1e-12);
}

TEST(PolynomialRoots, LinearAndConstant) {
  const std::vector<cplx> lin{cplx(2.0, 1.0), cplx(0.0, 1.0)};  // i z + (2 + i)
  const auto r = polynomial_roots(lin);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_LT(std::abs(r.roots[0] - (-cplx(2.0, 1.0) / cplx(0.0, 1.0))), 1e-15);
  const std::vector<cplx> constant{cplx(3.0)};
  EXPECT_TRUE(polynomial_roots(constant).roots.empty());
}

TEST(PolynomialRoots, ExactZeroRootsAreDeflated) {
  // z^2 (z - 2)
  const std::vector<cplx> c{0.0, 0.0, -2.0, 1.0};
  const auto r = polynomial_roots(c);
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_EQ(std::count(r.roots.begin(), r.roots.end(), cplx(0.0)), 2);
  EXPECT_LT(match_roots(r.roots, {0.0, 0.0, 2.0}), 1e-15);
}

TEST(PolynomialRoots, TrailingZeroLeadingCoefficientsIgnored) {
  const std::vector<cplx> c{-1.0, 0.0, 1.0, 0.0, 0.0};
  EXPECT_LT(match_roots(polynomial_roots(c).roots, {1.0, -1.0}), 1e-15);
}

TEST(PolynomialRoots, Degenerate) {
  const std::vector<cplx> zero{0.0, 0.0, 0.0};
  EXPECT_THROW(polynomial_roots(zero), DomainError);
  const std::vector<cplx> bad{1.0, cplx(std::nan(""), 0.0), 1.0};
  EXPECT_THROW(polynomial_roots(bad), DomainError);
}

TEST(PolynomialRoots, CompanionFallback) {
  const std::vector<cplx> want{1.0, cplx(0.0, 2.0), -3.0, cplx(0.5, -0.5)};
  RootOptions opt;
  opt.max_iterations = 0;
  const auto r = polynomial_roots(from_roots(want), opt);
  EXPECT_EQ(r.method, RootMethod::Companion);
  EXPECT_LT(match_roots(r.roots, want), 1e-12);
  opt.allow_companion = false;
  EXPECT_THROW(polynomial_roots(from_roots(want), opt), NumericError);
}

TEST(PolynomialRoots, RandomRootSets) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> deg(1, 9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<cplx> want(static_cast<std::size_t>(deg(rng)));
    for (auto& w : want) w = {u(rng), u(rng)};
    const auto got = polynomial_roots(from_roots(want)).roots;
    ASSERT_EQ(got.size(), want.size());
    EXPECT_LT(match_roots(got, want), 1e-8) << "trial " << trial;
  }
}

TEST(PolynomialRoots, WidelySpreadMagnitudes) {
  const std::vector<cplx> want{1e-4, cplx(0.0, -2e-4), 50.0, cplx(-30.0, 40.0), cplx(0.0, 1e3)};
  const auto got = polynomial_roots(from_roots(want)).roots;
  for (const auto& w : want) {
    const auto it = std::min_element(got.begin(), got.end(),
                                     [&w](const cplx& a, const cplx& b) { return std::abs(a - w) < std::abs(b - w); });
    EXPECT_LT(std::abs(*it - w), 1e-9 * std::abs(w)) << w;
  }
}
