#pragma once

// Dilogarithm, Lobachevsky function and Milnor's volume of ideal tetrahedra.

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hypervol {

using Complex = std::complex<double>;

namespace detail {

inline constexpr int kBernoulliTerms = 30;

// B_{2k} / (2k+1)!, k = 1..kBernoulliTerms.
inline const std::array<double, kBernoulliTerms>& li2_series_coefficients() {
  static const std::array<double, kBernoulliTerms> table = [] {
    std::array<double, kBernoulliTerms> t{};
    for (int k = 1; k <= kBernoulliTerms; ++k) {
      t[k - 1] = boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(2 * k + 1);
    }
    return t;
  }();
  return table;
}

// |B_{2k}| / (2k (2k+1)!), k = 1..kBernoulliTerms.
inline const std::array<double, kBernoulliTerms>& clausen_series_coefficients() {
  static const std::array<double, kBernoulliTerms> table = [] {
    std::array<double, kBernoulliTerms> t{};
    for (int k = 1; k <= kBernoulliTerms; ++k) {
      t[k - 1] = std::abs(boost::math::bernoulli_b2n<double>(k)) /
                 (2.0 * k * boost::math::factorial<double>(2 * k + 1));
    }
    return t;
  }();
  return table;
}

// Li2 on |z| <= 1, Re z <= 1/2 via the Bernoulli series in u = -log(1 - z),
// which converges for |u| < 2 pi; here |u| < 1.8.
inline Complex li2_bernoulli(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  const auto& a = li2_series_coefficients();
  Complex acc = 0.0;
  for (int k = kBernoulliTerms - 1; k >= 0; --k) acc = (acc + a[k]) * u2;
  return u - 0.25 * u2 + u * acc;
}

// Li2 on the closed unit disk; rounding slightly outside it is harmless.
inline Complex li2_disk(Complex z) {
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (z.real() > 0.5) {
    if (z == Complex(1.0, 0.0)) return pi2_6;
    return pi2_6 - std::log(z) * std::log(1.0 - z) - li2_bernoulli(1.0 - z);
  }
  return li2_bernoulli(z);
}

}  // namespace detail

/// Principal branch of the dilogarithm, cut along (1, inf). Points on the
/// cut with a zero imaginary part take the value approached from below.
inline Complex li2(Complex z) {
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (z == Complex(0.0, 0.0)) return 0.0;
  if (z == Complex(1.0, 0.0)) return pi2_6;
  if (z.imag() == 0.0 && z.real() > 1.0) z = Complex(z.real(), -0.0);

  if (std::norm(z) > 1.0) {
    const Complex log_minus_z = std::log(-z);
    return -pi2_6 - 0.5 * log_minus_z * log_minus_z - detail::li2_disk(1.0 / z);
  }
  return detail::li2_disk(z);
}

/// Clausen function Cl2(theta) = -int_0^theta log|2 sin(t/2)| dt.
inline double clausen2(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta -= two_pi * std::round(theta / two_pi);  // now in [-pi, pi]
  if (theta == 0.0) return 0.0;
  const double t2 = theta * theta;
  const auto& c = detail::clausen_series_coefficients();
  double acc = 0.0;
  for (int k = detail::kBernoulliTerms - 1; k >= 0; --k) acc = (acc + c[k]) * t2;
  return theta - theta * std::log(std::abs(theta)) + theta * acc;
}

/// Lobachevsky function Lambda(x) = -int_0^x log|2 sin t| dt; odd and
/// pi-periodic.
inline double lobachevsky(double x) { return 0.5 * clausen2(2.0 * x); }

/// Volume of the ideal tetrahedron with dihedral angles alpha, beta, gamma
/// at each vertex (alpha + beta + gamma = pi).
inline double milnor_ideal_volume(double alpha, double beta, double gamma) {
  constexpr double pi = std::numbers::pi;
  for (double angle : {alpha, beta, gamma}) {
    if (!(angle > 0.0 && angle < pi)) {
      throw std::invalid_argument("milnor_ideal_volume: each angle must lie in (0, pi)");
    }
  }
  if (std::abs(alpha + beta + gamma - pi) > 1e-9) {
    throw std::invalid_argument("milnor_ideal_volume: angles must sum to pi");
  }
  return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

}  // namespace hypervol
