#pragma once

// Realization of six dihedral angles as a generalized hyperbolic tetrahedron:
// the Gram-matrix criterion (signature (n,1) plus positive off-diagonal
// cofactors), vertex classification from the diagonal cofactors, explicit
// vertex and normal vectors in R^{1,3}, and edge lengths.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypervol/angles.hpp"
#include "hypervol/lorentz.hpp"

namespace hypervol {

inline constexpr double kDefaultEps = 1e-9;

enum class VertexKind { Finite, Ideal, Ultraideal };

constexpr std::string_view kind_name(VertexKind kind) {
  switch (kind) {
    case VertexKind::Finite: return "Finite";
    case VertexKind::Ideal: return "Ideal";
    case VertexKind::Ultraideal: return "Ultraideal";
  }
  return "?";
}

/// Vertex class together with the diagonal cofactor that decides it.
struct VertexClass {
  VertexKind kind = VertexKind::Finite;
  double cofactor = 0.0;
};

/// Scale-relative threshold below which a diagonal cofactor counts as zero.
inline double ideal_tolerance(double det_g) { return 1e-9 * std::max(1.0, std::abs(det_g)); }

inline VertexClass classify_cofactor(double c, double tol) {
  if (c > tol) return {VertexKind::Finite, c};
  if (c < -tol) return {VertexKind::Ultraideal, c};
  return {VertexKind::Ideal, c};
}

/// Why a set of angles is not the angle set of a generalized tetrahedron.
struct Rejection {
  enum class Condition { Signature, Cofactor };

  Condition condition = Condition::Signature;
  Signature signature;
  std::vector<double> eigenvalues;
  int i = -1;  // offending cofactor, 0-based
  int j = -1;
  double cofactor = 0.0;

  std::string describe() const {
    std::ostringstream os;
    if (condition == Condition::Signature) {
      os << "condition (a) violated: sgn G = (" << signature.positives << "," << signature.negatives << ")";
      if (signature.zeros > 0) os << " with " << signature.zeros << " zero eigenvalue(s)";
    } else {
      os << "condition (b) violated: c_" << i + 1 << j + 1 << " = " << cofactor << " is not positive";
    }
    return os.str();
  }
};

class InvalidAngles : public std::runtime_error {
 public:
  explicit InvalidAngles(Rejection rejection)
      : std::runtime_error(rejection.describe()), rejection_(std::move(rejection)) {}
  const Rejection& rejection() const { return rejection_; }

 private:
  Rejection rejection_;
};

using Validation = std::variant<GramMatrix, Rejection>;

inline void require_domain(const DihedralAngles& angles) {
  if (!angles.in_domain()) {
    throw std::domain_error("dihedral angles must lie in [0, pi)");
  }
}

/// Checks the realization criterion for any order n+1 >= 4: signature (n,1)
/// and c_ij > 0 for i != j. eps is the relative eigenvalue threshold; the
/// cofactor test uses the scale-relative ideal tolerance.
inline Validation validate_gram(const GramMatrix& g, double eps = kDefaultEps) {
  const Eigen::VectorXd ev = symmetric_eigenvalues(g.matrix());
  const Signature sig = signature(g.matrix(), eps);
  const int n = g.order();
  if (sig.positives != n - 1 || sig.negatives != 1) {
    Rejection r;
    r.condition = Rejection::Condition::Signature;
    r.signature = sig;
    r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    return r;
  }
  const double tol = ideal_tolerance(determinant(g));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double c = cofactor(g, i, j);
      if (!(c > tol)) {
        Rejection r;
        r.condition = Rejection::Condition::Cofactor;
        r.signature = sig;
        r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
        r.i = i;
        r.j = j;
        r.cofactor = c;
        return r;
      }
    }
  }
  return g;
}

inline Validation validate_angles(const DihedralAngles& angles, double eps = kDefaultEps) {
  require_domain(angles);
  return validate_gram(gram_from_angles(angles), eps);
}

inline bool is_valid(const DihedralAngles& angles, double eps = kDefaultEps) {
  return angles.in_domain() && std::holds_alternative<GramMatrix>(validate_angles(angles, eps));
}

/// Validated Gram matrix or InvalidAngles.
inline GramMatrix require_valid(const DihedralAngles& angles, double eps = kDefaultEps) {
  auto v = validate_angles(angles, eps);
  if (auto* r = std::get_if<Rejection>(&v)) throw InvalidAngles(std::move(*r));
  return std::get<GramMatrix>(std::move(v));
}

/// Vertex i is opposite facet i; its class is the sign of c_ii.
inline std::array<VertexClass, 4> classify_vertices(const GramMatrix& g, double tol) {
  if (g.order() != 4) throw std::invalid_argument("classify_vertices: expected a 4x4 Gram matrix");
  std::array<VertexClass, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = classify_cofactor(cofactor(g, i, i), tol);
  return out;
}

inline std::array<VertexClass, 4> classify_vertices(const GramMatrix& g) {
  return classify_vertices(g, ideal_tolerance(determinant(g)));
}

struct TetrahedronShape {
  DihedralAngles angles;
  GramMatrix gram{Eigen::MatrixXd::Identity(4, 4)};
  double det_g = 0.0;
  Eigen::Matrix4d cofactors = Eigen::Matrix4d::Zero();
  std::array<VertexClass, 4> classes{};
  /// Lifted vertices: on H_T+ (finite), L+ with time coordinate 1 (ideal),
  /// or H_S (ultraideal, lifted so that <x, v> <= 0 keeps the simplex side).
  std::array<LorentzVector, 4> vertices;
  /// Outward unit normals on H_S; normal i belongs to the facet opposite vertex i.
  std::array<LorentzVector, 4> normals;

  bool has_ideal_vertex() const {
    return std::any_of(classes.begin(), classes.end(),
                       [](const VertexClass& c) { return c.kind == VertexKind::Ideal; });
  }
};

/// Builds normals u_i from a congruence G = U^T diag(-1,1,1,1) U and the
/// vertices v_i ~ w_i = sum_k c_ik u_k, then fixes the global sign so that
/// finite and ideal vertices have positive time coordinate. When every
/// vertex is ultraideal the sum of the vertex vectors is timelike and is
/// made future pointing instead. ideal_tol overrides the default threshold
/// on |c_ii| for ideal vertices.
inline TetrahedronShape construct_shape(const DihedralAngles& angles, double eps = kDefaultEps,
                                        std::optional<double> ideal_tol = std::nullopt) {
  TetrahedronShape s;
  s.angles = angles;
  s.gram = require_valid(angles, eps);
  const Eigen::Matrix4d g = s.gram.matrix();
  s.det_g = determinant(g);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) s.cofactors(i, j) = cofactor(g, i, j);
  }
  const double tol = ideal_tol.value_or(ideal_tolerance(s.det_g));
  for (int i = 0; i < 4; ++i) s.classes[i] = classify_cofactor(s.cofactors(i, i), tol);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(g);
  const Eigen::Vector4d lambda = eig.eigenvalues();  // ascending; lambda[0] < 0
  const Eigen::Matrix4d q = eig.eigenvectors();
  Eigen::Matrix4d u;
  for (int r = 0; r < 4; ++r) u.row(r) = std::sqrt(std::abs(lambda[r])) * q.col(r).transpose();

  Eigen::Matrix4d w = u * s.cofactors.transpose();  // column i is w_i
  for (int i = 0; i < 4; ++i) {
    if (s.classes[i].kind != VertexKind::Ideal) {
      w.col(i) /= std::sqrt(std::abs(s.cofactors(i, i) * s.det_g));
    }
  }

  int anchor = -1;
  for (int i = 0; i < 4 && anchor < 0; ++i) {
    if (s.classes[i].kind != VertexKind::Ultraideal) anchor = i;
  }
  const double orientation = anchor >= 0 ? w(0, anchor) : w.row(0).sum();
  if (orientation < 0.0) {
    u = -u;
    w = -w;
  }
  for (int i = 0; i < 4; ++i) {
    if (s.classes[i].kind == VertexKind::Ideal) w.col(i) /= w(0, i);
    s.vertices[i] = LorentzVector(Eigen::VectorXd(w.col(i)));
    s.normals[i] = LorentzVector(Eigen::VectorXd(u.col(i)));
  }
  return s;
}

/// theta_ij = arccos(-<u_i, u_j>). Throws std::domain_error when two face
/// planes do not meet (|<u_i, u_j>| > 1 + eps).
inline DihedralAngles angles_from_normals(const std::array<LorentzVector, 4>& normals,
                                          double eps = kDefaultEps) {
  DihedralAngles out;
  for (EdgeLabel label : kAllEdges) {
    const auto [i, j] = facet_pair(label);
    const double ip = lorentz_inner(normals[i], normals[j]);
    if (std::abs(ip) > 1.0 + eps) {
      throw std::domain_error("angles_from_normals: face planes " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " are ultraparallel");
    }
    out[label] = std::acos(std::clamp(-ip, -1.0, 1.0));
  }
  return out;
}

inline DihedralAngles angles_from_normals(const TetrahedronShape& shape, double eps = kDefaultEps) {
  return angles_from_normals(shape.normals, eps);
}

struct EdgeLength {
  double value = 0.0;  // +inf when an endpoint is ideal
  std::pair<int, int> edge{};
  EdgeLabel label = EdgeLabel::A;

  bool infinite() const { return std::isinf(value); }
};

/// Length of the edge carrying `label`, from the closed form
///   exp(2l) = (2 c_kl^2 - c_kk c_ll + 2 c_kl sqrt(-det G) sin theta) / |c_kk c_ll|
/// where k, l are its endpoints. Ultraideal endpoints measure to their polar
/// truncation planes.
inline EdgeLength edge_length(const TetrahedronShape& shape, EdgeLabel label) {
  const auto [k, l] = edge_endpoints(label);
  EdgeLength out{0.0, {k, l}, label};
  if (shape.classes[k].kind == VertexKind::Ideal || shape.classes[l].kind == VertexKind::Ideal) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  const double radicand = -shape.det_g;
  if (radicand < -ideal_tolerance(shape.det_g)) {
    throw std::logic_error("edge_length: det G is positive for a constructed shape");
  }
  const double ckl = shape.cofactors(k, l);
  const double p = shape.cofactors(k, k) * shape.cofactors(l, l);
  double cross = 2.0 * ckl * std::sqrt(std::max(radicand, 0.0)) * std::sin(shape.angles[label]);
#ifdef HYPERVOL_MUTATE_EDGE_SIGN
  cross = -cross;
#endif
  const double exp2l = (2.0 * ckl * ckl - p + cross) / std::abs(p);
  if (!(exp2l > 0.0)) throw std::logic_error("edge_length: exp(2l) is not positive");
  const double len = 0.5 * std::log(exp2l);
  if (len < -1e-9) throw std::logic_error("edge_length: closed form gives a negative length");
  out.value = std::max(len, 0.0);
  return out;
}

inline std::array<EdgeLength, 6> edge_lengths(const TetrahedronShape& shape) {
  std::array<EdgeLength, 6> out;
  for (EdgeLabel label : kAllEdges) out[static_cast<int>(label)] = edge_length(shape, label);
  return out;
}

/// c_kl^2 - c_kk c_ll - (-det G) sin^2(theta) for the edge carrying `label`;
/// zero by Jacobi's theorem on complementary minors.
inline double jacobi_residual(const GramMatrix& g, EdgeLabel label) {
  const auto [i, j] = facet_pair(label);
  const auto [k, l] = edge_endpoints(label);
  const double det = determinant(g);
  const double ckl = cofactor(g, k, l);
  const double sin2 = 1.0 - g(i, j) * g(i, j);
  return ckl * ckl - cofactor(g, k, k) * cofactor(g, l, l) - (-det) * sin2;
}

}  // namespace hypervol
