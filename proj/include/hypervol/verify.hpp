#pragma once

// Seeded property checks over random valid angle sets: Schlafli gradient,
// Jacobi identity, realization round trip with vertex classification,
// invariance under vertex relabeling, and the maximal-volume bound.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypervol/angles.hpp"
#include "hypervol/shape.hpp"
#include "hypervol/volume.hpp"

namespace hypervol {

/// Reproducible stream of random angle sets.
class AngleSampler {
 public:
  explicit AngleSampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [lo, hi)^6.
  DihedralAngles next_raw(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::array<double, 6> a{};
    for (double& x : a) x = dist(gen_);
    return DihedralAngles::from_array(a);
  }

  /// Uniform on [0, pi)^6 conditioned on validity.
  DihedralAngles next_valid() {
    for (;;) {
      const DihedralAngles a = next_raw(0.0, std::numbers::pi);
      if (is_valid(a)) return a;
    }
  }

  /// Uniform on [0.8, 1.8)^6 conditioned on validity, every vertex finite
  /// with c_ii > margin * max(1, |det G|), det G <= -min_volume_det (away
  /// from the Euclidean degeneration), and validity surviving a change of
  /// any one angle by +-step.
  DihedralAngles next_compact(double margin = 1e-2, double min_volume_det = 3e-3, double step = 1e-5) {
    for (;;) {
      const DihedralAngles a = next_raw(0.8, 1.8);
      if (!is_valid(a)) continue;
      const GramMatrix g = gram_from_angles(a);
      const double det = determinant(g);
      if (det > -min_volume_det) continue;
      const double floor = margin * std::max(1.0, std::abs(det));
      const auto classes = classify_vertices(g);
      if (!std::all_of(classes.begin(), classes.end(),
                       [&](const VertexClass& c) { return c.cofactor > floor; })) {
        continue;
      }
      bool stable = true;
      for (EdgeLabel label : kAllEdges) {
        for (double s : {step, -step}) {
          DihedralAngles b = a;
          b[label] += s;
          stable = stable && is_valid(b);
        }
      }
      if (stable) return a;
    }
  }

 private:
  std::mt19937_64 gen_;
};

struct VerifyOptions {
  int cases = 100;
  std::uint64_t seed = 1;
  double schlafli_step = 1e-5;
  double schlafli_tol = 1e-6;
  double jacobi_tol = 1e-10;     // relative to max(1, |det G|)
  double round_trip_tol = 1e-9;  // per angle
  double norm_tol = 1e-9;        // |<v, v>| below this counts as lightlike
  double symmetry_tol = 1e-10;
  double max_volume_slack = 1e-9;
};

struct PropertyOutcome {
  std::string name;
  int checked = 0;
  int failures = 0;
  double worst = 0.0;  // largest test statistic seen
  std::vector<std::string> failing_inputs;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  int cases = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyOutcome> properties;

  bool passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyOutcome& p) { return p.passed(); });
  }
};

inline std::string describe_angles(const DihedralAngles& a) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << a.A << ", " << a.B << ", " << a.C << ", " << a.D << ", " << a.E << ", " << a.F << ")";
  return os.str();
}

namespace detail {

inline void record(PropertyOutcome& out, const DihedralAngles& a, double stat, bool ok, const std::string& note = {}) {
  ++out.checked;
  if (std::isfinite(stat)) out.worst = std::max(out.worst, stat);
  if (!ok) {
    ++out.failures;
    constexpr std::size_t kMaxEchoed = 5;
    if (out.failing_inputs.size() < kMaxEchoed) {
      out.failing_inputs.push_back(describe_angles(a) + (note.empty() ? "" : ": " + note));
    }
  }
}

// Sign of <v_i, v_i> agrees with the class read off c_ii.
inline bool classes_match_norms(const TetrahedronShape& s, double tol) {
  for (int i = 0; i < 4; ++i) {
    const double q = lorentz_inner(s.vertices[i], s.vertices[i]);
    bool ok = false;
    switch (s.classes[i].kind) {
      case VertexKind::Finite: ok = q < -tol; break;
      case VertexKind::Ideal: ok = std::abs(q) <= tol; break;
      case VertexKind::Ultraideal: ok = q > tol; break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

inline void check_schlafli(const DihedralAngles& a, const VerifyOptions& o, PropertyOutcome& out) {
  try {
    const auto res = schlafli_residual(a, o.schlafli_step);
    double m = 0.0;
    for (double r : res) m = std::max(m, std::abs(r));
    detail::record(out, a, m, m < o.schlafli_tol);
  } catch (const std::exception& e) {
    detail::record(out, a, 0.0, false, e.what());
  }
}

inline void check_jacobi(const DihedralAngles& a, const VerifyOptions& o, PropertyOutcome& out) {
  const GramMatrix g = gram_from_angles(a);
  const double scale = std::max(1.0, std::abs(determinant(g)));
  double m = 0.0;
  for (EdgeLabel label : kAllEdges) m = std::max(m, std::abs(jacobi_residual(g, label)) / scale);
  detail::record(out, a, m, m < o.jacobi_tol);
}

inline void check_round_trip(const DihedralAngles& a, const VerifyOptions& o, PropertyOutcome& out) {
  try {
    const TetrahedronShape s = construct_shape(a);
    const DihedralAngles back = angles_from_normals(s);
    double m = 0.0;
    for (EdgeLabel label : kAllEdges) m = std::max(m, std::abs(back[label] - a[label]));
    const bool classes_ok = detail::classes_match_norms(s, o.norm_tol);
    detail::record(out, a, m, m <= o.round_trip_tol && classes_ok, classes_ok ? "" : "vertex class mismatch");
  } catch (const std::exception& e) {
    detail::record(out, a, 0.0, false, e.what());
  }
}

inline void check_symmetry(const DihedralAngles& a, const VerifyOptions& o, PropertyOutcome& out) {
  try {
    const double base = tetra_volume(a).volume;
    double m = 0.0;
    for (const auto& perm : vertex_permutations()) {
      m = std::max(m, std::abs(tetra_volume(permuted(a, perm)).volume - base));
    }
    detail::record(out, a, m, m <= o.symmetry_tol);
  } catch (const std::exception& e) {
    detail::record(out, a, 0.0, false, e.what());
  }
}

inline void check_maximality(const DihedralAngles& a, const VerifyOptions& o, PropertyOutcome& out) {
  try {
    const double v = tetra_volume(a).volume;
    detail::record(out, a, v, v <= max_generalized_volume() + o.max_volume_slack);
  } catch (const std::exception& e) {
    detail::record(out, a, 0.0, false, e.what());
  }
}

/// Runs every property on `cases` random valid angle sets (and the Schlafli
/// check on as many random compact ones).
inline VerifyReport run_verification(const VerifyOptions& o) {
  VerifyReport report;
  report.cases = o.cases;
  report.seed = o.seed;
  PropertyOutcome schlafli{"schlafli"};
  PropertyOutcome jacobi{"jacobi"};
  PropertyOutcome round_trip{"round_trip"};
  PropertyOutcome symmetry{"symmetry"};
  PropertyOutcome maximality{"maximality"};

  AngleSampler valid(o.seed);
  AngleSampler compact(o.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < o.cases; ++k) {
    const DihedralAngles a = valid.next_valid();
    check_jacobi(a, o, jacobi);
    check_round_trip(a, o, round_trip);
    check_symmetry(a, o, symmetry);
    check_maximality(a, o, maximality);
    check_schlafli(compact.next_compact(1e-2, 3e-3, o.schlafli_step), o, schlafli);
  }
  report.properties = {schlafli, jacobi, round_trip, symmetry, maximality};
  return report;
}

}  // namespace hypervol
