#pragma once

// Reference computations used only by the tests. None of them call the
// library routine they are used to check.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "hypervol/specfun.hpp"
#include "hypervol/volume.hpp"

namespace hvtest {

using Complex = std::complex<double>;

/// sum_{k>=1} z^k / k^2, for |z| <= 1/2.
inline Complex li2_power_series(Complex z) {
  Complex term = z;
  Complex sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    sum += term / double(k) / double(k);
    term *= z;
  }
  return sum;
}

/// Li2(z) = -int_0^1 log(1 - z t) / t dt with the principal logarithm; valid
/// off the cut [1, inf). The path is split where it passes closest to the
/// logarithmic singularity t = 1/z.
inline Complex li2_integral(Complex z) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto part = [&](bool imag, double lo, double hi) {
    auto f = [&](double t) {
      if (t == 0.0) return imag ? -z.imag() : -z.real();
      const Complex v = -std::log(1.0 - z * t) / t;
      return imag ? v.imag() : v.real();
    };
    return integrator.integrate(f, lo, hi);
  };
  const double t0 = std::real(1.0 / z);
  Complex sum = 0.0;
  if (t0 > 0.0 && t0 < 1.0) {
    sum += Complex(part(false, 0.0, t0), part(true, 0.0, t0));
    sum += Complex(part(false, t0, 1.0), part(true, t0, 1.0));
  } else {
    sum = Complex(part(false, 0.0, 1.0), part(true, 0.0, 1.0));
  }
  return sum;
}

/// Lambda(x) = -int_0^x log|2 sin t| dt for x in (0, pi).
inline double lobachevsky_quadrature(double x) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [](double t) { return -std::log(std::abs(2.0 * std::sin(t))); };
  return integrator.integrate(f, 0.0, x);
}

/// Five-point central difference of a complex-analytic f along the real
/// direction.
template <class F>
Complex five_point(F&& f, Complex z, double h) {
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

/// Distance from z to the nearest logarithmic branch point of U.
inline double branch_distance(Complex z, const hypervol::DihedralAngles& a) {
  const hypervol::detail::UnitExponentials x(a);
  double d = HUGE_VAL;
  for (const Complex& k : x.positive()) d = std::min(d, std::abs(z - 1.0 / k));
  for (const Complex& k : x.negative()) d = std::min(d, std::abs(z + 1.0 / k));
  return d;
}

/// dU/dz at a saddle on the given sheet by finite differences.
inline Complex saddle_derivative(Complex z, const hypervol::DihedralAngles& a, int sheet) {
  const double h = std::min(1e-3, branch_distance(z, a) / 50.0);
  return five_point([&](Complex w) { return hypervol::u_on_sheet(w, a, sheet); }, z, h);
}

/// 3x3 determinant by the rule of Sarrus.
inline double det3(double a, double b, double c, double d, double e, double f, double g, double h, double i) {
  return a * e * i + b * f * g + c * d * h - c * e * g - b * d * i - a * f * h;
}

/// Random symmetric matrix with unit diagonal and off-diagonal entries in [-1, 1].
inline Eigen::MatrixXd random_unit_symmetric(std::mt19937_64& gen, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = dist(gen);
  }
  return m;
}

}  // namespace hvtest
