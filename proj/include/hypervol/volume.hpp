#pragma once

// Volume of a generalized hyperbolic tetrahedron from its dihedral angles
// through the dilogarithm function U(z, T) evaluated at its two saddle
// points, plus the Schlafli-formula gradient and its finite-difference check.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypervol/angles.hpp"
#include "hypervol/lorentz.hpp"
#include "hypervol/shape.hpp"
#include "hypervol/specfun.hpp"

namespace hypervol {

namespace detail {

struct UnitExponentials {
  Complex a, b, c, d, e, f;

  explicit UnitExponentials(const DihedralAngles& t)
      : a(std::polar(1.0, t.A)),
        b(std::polar(1.0, t.B)),
        c(std::polar(1.0, t.C)),
        d(std::polar(1.0, t.D)),
        e(std::polar(1.0, t.E)),
        f(std::polar(1.0, t.F)) {}

  // Multipliers k of the Li2(k z) terms entering U with a plus sign...
  std::array<Complex, 4> positive() const { return {1.0, a * b * d * e, a * c * d * f, b * c * e * f}; }
  // ...and of the Li2(-k z) terms entering with a minus sign.
  std::array<Complex, 4> negative() const { return {a * b * c, a * e * f, b * d * f, c * d * e}; }
};

}  // namespace detail

/// U(z, T) = 1/2 { Li2(z) + Li2(abde z) + Li2(acdf z) + Li2(bcef z)
///                 - Li2(-abc z) - Li2(-aef z) - Li2(-bdf z) - Li2(-cde z) }
/// with a = exp(iA), ..., f = exp(iF), on the principal branch of Li2.
inline Complex u_function(Complex z, const DihedralAngles& angles) {
  const detail::UnitExponentials x(angles);
  Complex sum = 0.0;
  for (const Complex& k : x.positive()) sum += li2(k * z);
  for (const Complex& k : x.negative()) sum -= li2(-k * z);
  return 0.5 * sum;
}

struct SaddlePair {
  Complex z1;
  Complex z2;
};

class DegenerateDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// z1,2 = -2 (sinA sinD + sinB sinE + sinC sinF -/+ r) /
///        (ad + be + cf + abf + ace + bcd + def + abcdef)
/// where r = -i sqrt(-det G) is the square root of det G < 0 for which the
/// right-angled octahedron gives (z1, z2) = (-i, i).
inline SaddlePair saddle_points(const DihedralAngles& angles, double eps = 1e-12) {
  const double det = determinant(gram_from_angles(angles));
  if (!(det < 0.0)) throw std::domain_error("saddle_points: det G must be negative");
  const detail::UnitExponentials x(angles);
  const auto& [a, b, c, d, e, f] = x;
  const Complex denominator =
      a * d + b * e + c * f + a * b * f + a * c * e + b * c * d + d * e * f + a * b * c * d * e * f;
  if (std::abs(denominator) <= eps) {
    throw DegenerateDenominator("saddle_points: denominator vanishes");
  }
  const double numerator = std::sin(angles.A) * std::sin(angles.D) + std::sin(angles.B) * std::sin(angles.E) +
                           std::sin(angles.C) * std::sin(angles.F);
  const Complex root(0.0, -std::sqrt(-det));
  return {-2.0 * (numerator - root) / denominator, -2.0 * (numerator + root) / denominator};
}

/// z U'(z) * 2 = -log(1 - z) - sum log(1 - k z) + sum log(1 + k' z), principal logs.
inline Complex u_log_derivative_sum(Complex z, const DihedralAngles& angles) {
  const detail::UnitExponentials x(angles);
  Complex s = 0.0;
  for (const Complex& k : x.positive()) s -= std::log(1.0 - k * z);
  for (const Complex& k : x.negative()) s += std::log(1.0 + k * z);
  return s;
}

/// At a saddle the principal-branch log sum is 2 pi i m for an integer m, so
/// dU/dz = i pi m / z there. Returns m: the sheet U(z) - i pi m log z is
/// stationary at z.
inline int saddle_sheet(Complex z, const DihedralAngles& angles) {
  return static_cast<int>(std::lround(u_log_derivative_sum(z, angles).imag() / (2.0 * std::numbers::pi)));
}

/// U continued to another sheet: U(z) - i pi m log z.
inline Complex u_on_sheet(Complex z, const DihedralAngles& angles, int sheet) {
  return u_function(z, angles) - Complex(0.0, std::numbers::pi * sheet) * std::log(z);
}

struct VolumeResult {
  double volume = 0.0;
  SaddlePair saddles;
  std::pair<Complex, Complex> u_values;  // principal-branch U(z1), U(z2)
  std::pair<int, int> sheets{};          // stationary sheets at z1, z2
  /// 1/2 Re(U(z2) - U(z1)) on the stationary sheets; a diagnostic only.
  double real_part = 0.0;
  std::vector<std::string> branch_warnings;
};

namespace detail {

inline void flag_branch_cut(const DihedralAngles& angles, Complex z, const char* which,
                            std::vector<std::string>& warnings) {
  constexpr double near = 1e-8;
  const UnitExponentials x(angles);
  std::vector<Complex> args;
  for (const Complex& k : x.positive()) args.push_back(k * z);
  for (const Complex& k : x.negative()) args.push_back(-k * z);
  for (const Complex& w : args) {
    if (std::abs(w.imag()) <= near && w.real() > 1.0 + near) {
      std::ostringstream os;
      os.precision(17);
      os << "Li2 argument " << w.real() << (w.imag() < 0 ? "-" : "+") << std::abs(w.imag())
         << "i at saddle " << which << " lies on the branch cut";
      warnings.push_back(os.str());
    }
  }
}

}  // namespace detail

/// Vol(T) = 1/2 Im(U(z2, T) - U(z1, T)) with the saddle labelling above
/// (equivalently 1/2 Im(U(z1) - U(z2)) under the principal square root).
/// Throws InvalidAngles when the angles are not realizable.
inline VolumeResult tetra_volume(const DihedralAngles& angles, double eps = kDefaultEps) {
  require_valid(angles, eps);
  VolumeResult r;
  r.saddles = saddle_points(angles);
  r.u_values = {u_function(r.saddles.z1, angles), u_function(r.saddles.z2, angles)};
  r.sheets = {saddle_sheet(r.saddles.z1, angles), saddle_sheet(r.saddles.z2, angles)};
  const Complex bracket = r.u_values.second - r.u_values.first;
  const Complex stationary_bracket =
      u_on_sheet(r.saddles.z2, angles, r.sheets.second) - u_on_sheet(r.saddles.z1, angles, r.sheets.first);
  r.real_part = 0.5 * stationary_bracket.real();
  detail::flag_branch_cut(angles, r.saddles.z1, "z1", r.branch_warnings);
  detail::flag_branch_cut(angles, r.saddles.z2, "z2", r.branch_warnings);
  const double raw = 0.5 * bracket.imag();
  if (!std::isfinite(raw)) throw std::runtime_error("tetra_volume: non-finite volume");
  if (raw < 0.0) {
    r.branch_warnings.push_back("negative bracket " + std::to_string(raw) + " replaced by its absolute value");
  }
  r.volume = std::abs(raw);
  return r;
}

class IdealVertexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Schlafli: dVol = -1/2 sum l_i d theta_i, so the gradient with respect to
/// (A, ..., F) is -l/2 per edge. Needs every edge length finite.
inline std::array<double, 6> schlafli_gradient(const DihedralAngles& angles) {
  const TetrahedronShape shape = construct_shape(angles);
  std::array<double, 6> grad{};
  for (EdgeLabel label : kAllEdges) {
    const EdgeLength len = edge_length(shape, label);
    if (len.infinite()) {
      throw IdealVertexError("schlafli_gradient: edge " + std::string(label_name(label)) +
                             " ends at an ideal vertex");
    }
    grad[static_cast<int>(label)] = -0.5 * len.value;
  }
  return grad;
}

/// Central difference of the volume in each angle minus the Schlafli gradient.
inline std::array<double, 6> schlafli_residual(const DihedralAngles& angles, double h = 1e-5) {
  const auto grad = schlafli_gradient(angles);
  std::array<double, 6> out{};
  for (EdgeLabel label : kAllEdges) {
    DihedralAngles up = angles;
    DihedralAngles down = angles;
    up[label] += h;
    down[label] -= h;
    if (!is_valid(up) || !is_valid(down)) {
      throw std::domain_error("schlafli_residual: step in " + std::string(label_name(label)) +
                              " leaves the validity region");
    }
    const double fd = (tetra_volume(up).volume - tetra_volume(down).volume) / (2.0 * h);
    out[static_cast<int>(label)] = fd - grad[static_cast<int>(label)];
  }
  return out;
}

/// Largest volume of a generalized tetrahedron: the right-angled ideal
/// octahedron, 8 Lambda(pi/4).
inline double max_generalized_volume() { return 8.0 * lobachevsky(std::numbers::pi / 4.0); }

}  // namespace hypervol
