#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numbers>

#include "hypervol/specfun.hpp"
#include "support.hpp"

using namespace hypervol;
using std::numbers::pi;

TEST(Li2, ZeroAndOne) {
  EXPECT_EQ(li2(0.0), Complex(0.0, 0.0));
  // Partial sums of 1/k^2 with the Euler-Maclaurin tail 1/N - 1/(2N^2) + 1/(6N^3).
  const int n = 100000;
  double partial = 0.0;
  for (int k = n; k >= 1; --k) partial += 1.0 / (double(k) * k);
  const double tail = 1.0 / n - 0.5 / (double(n) * n) + 1.0 / (6.0 * n * double(n) * n);
  EXPECT_NEAR(li2(1.0).real(), partial + tail, 1e-14);
  EXPECT_EQ(li2(1.0).imag(), 0.0);
}

TEST(Li2, MatchesPowerSeriesInsideHalfDisk) {
  for (int i = -10; i <= 10; ++i) {
    for (int j = -10; j <= 10; ++j) {
      const Complex z(i / 20.0, j / 20.0);
      if (std::abs(z) > 0.5) continue;
      const Complex expected = hvtest::li2_power_series(z);
      EXPECT_NEAR(std::abs(li2(z) - expected), 0.0, 1e-13) << z;
    }
  }
}

TEST(Li2, MatchesIntegralRepresentationEverywhereOffTheCut) {
  for (double r : {0.3, 0.7, 0.99, 1.0, 1.01, 1.6, 3.0, 12.0}) {
    for (int k = 0; k < 24; ++k) {
      const double phi = -pi + (k + 0.5) * (2.0 * pi / 24.0);
      const Complex z = std::polar(r, phi);
      const Complex expected = hvtest::li2_integral(z);
      EXPECT_LT(std::abs(li2(z) - expected), 1e-11 * std::max(1.0, std::abs(expected))) << z;
    }
  }
}

TEST(Li2, CutIsApproachedFromBelow) {
  for (double x : {1.5, 2.0, 7.0}) {
    const Complex below = hvtest::li2_integral(Complex(x, -1e-13));
    EXPECT_LT(std::abs(li2(Complex(x, 0.0)) - below), 1e-9);
    EXPECT_LT(li2(Complex(x, 0.0)).imag(), 0.0);
  }
}

TEST(Li2, SchwarzReflection) {
  for (const Complex z : {Complex(0.3, 0.9), Complex(-2.0, 0.5), Complex(1.2, -3.0)}) {
    EXPECT_LT(std::abs(li2(std::conj(z)) - std::conj(li2(z))), 1e-14);
  }
}

TEST(Li2, UnitCircleImaginaryPartIsTwiceLobachevsky) {
  for (double x : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(li2(std::polar(1.0, x)).imag(), 2.0 * hvtest::lobachevsky_quadrature(x / 2.0), 1e-12);
  }
}

TEST(Lobachevsky, VanishesAtHalfPi) { EXPECT_NEAR(lobachevsky(pi / 2), 0.0, 1e-15); }

TEST(Lobachevsky, OddAndPiPeriodic) {
  for (double x : {0.1, 0.4, 1.0, 1.3, 2.2, 3.0}) {
    EXPECT_NEAR(lobachevsky(x + pi), lobachevsky(x), 1e-14);
    EXPECT_NEAR(lobachevsky(-x), -lobachevsky(x), 1e-15);
  }
}

TEST(Lobachevsky, QuarterPiIsHalfCatalan) {
  const double catalan = boost::math::constants::catalan<double>();
  EXPECT_NEAR(lobachevsky(pi / 4), catalan / 2.0, 1e-15);
  EXPECT_NEAR(lobachevsky(pi / 4), hvtest::lobachevsky_quadrature(pi / 4), 1e-13);
}

TEST(Lobachevsky, AgreesWithQuadrature) {
  for (int k = 1; k < 60; ++k) {
    const double x = k * pi / 60.0;
    EXPECT_NEAR(lobachevsky(x), hvtest::lobachevsky_quadrature(x), 1e-10) << x;
  }
}

TEST(Lobachevsky, MaximumAtSixthOfPi) {
  const double peak = lobachevsky(pi / 6);
  for (int k = 0; k <= 10000; ++k) EXPECT_LE(lobachevsky(k * pi / 10000.0), peak + 1e-15);
}

TEST(Clausen, AgreesWithLobachevskyQuadrature) {
  for (double t : {0.2, 1.0, 2.0, 3.0, 5.5, -1.7}) {
    const double x = t / 2.0;
    double reduced = std::fmod(x, pi);
    if (reduced < 0) reduced += pi;
    const double expected = reduced == 0.0 ? 0.0 : 2.0 * hvtest::lobachevsky_quadrature(reduced);
    EXPECT_NEAR(clausen2(t), expected, 1e-10);
  }
}

TEST(Milnor, RightIsoscelesPiece) {
  EXPECT_NEAR(milnor_ideal_volume(pi / 2, pi / 4, pi / 4), 2.0 * hvtest::lobachevsky_quadrature(pi / 4), 1e-12);
}

TEST(Milnor, RegularIdealTetrahedron) {
  const double expected = 3.0 * hvtest::lobachevsky_quadrature(pi / 3);
  EXPECT_NEAR(milnor_ideal_volume(pi / 3, pi / 3, pi / 3), expected, 1e-12);
  EXPECT_NEAR(expected, 1.0149416, 1e-7);
}

TEST(Milnor, DegeneratesToZero) {
  double previous = HUGE_VAL;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double v = milnor_ideal_volume(pi - 2 * eps, eps, eps);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, previous);
    previous = v;
  }
  EXPECT_LT(previous, 1e-2);
}

TEST(Milnor, RejectsBadAngles) {
  EXPECT_THROW(milnor_ideal_volume(1.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(milnor_ideal_volume(pi, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(milnor_ideal_volume(-0.1, pi / 2, pi / 2 + 0.1), std::invalid_argument);
}
