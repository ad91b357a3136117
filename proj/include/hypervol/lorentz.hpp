#pragma once

// Lorentzian linear algebra on R^{1,n}: the inner product
// <x, y> = -x0 y0 + x1 y1 + ... + xn yn, Gram matrices of facet normals,
// cofactors, determinants and signatures.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervol/angles.hpp"

namespace hypervol {

/// A vector of R^{1,n}; coordinate 0 is the timelike one.
class LorentzVector {
 public:
  LorentzVector() : coords_(Eigen::VectorXd::Zero(4)) {}

  explicit LorentzVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
    if (coords_.size() < 4) {
      throw std::invalid_argument("LorentzVector: dimension n must be at least 3");
    }
  }

  LorentzVector(std::initializer_list<double> coords)
      : LorentzVector(Eigen::Map<const Eigen::VectorXd>(coords.begin(),
                                                        static_cast<Eigen::Index>(coords.size()))) {}

  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  double time() const { return coords_[0]; }
  double operator[](int k) const { return coords_[k]; }
  const Eigen::VectorXd& coords() const { return coords_; }

  LorentzVector operator-() const { return LorentzVector(-coords_); }
  LorentzVector operator*(double s) const { return LorentzVector(coords_ * s); }
  LorentzVector operator/(double s) const { return LorentzVector(coords_ / s); }
  LorentzVector operator+(const LorentzVector& o) const { return LorentzVector(coords_ + o.coords_); }

 private:
  Eigen::VectorXd coords_;
};

inline double lorentz_inner(const LorentzVector& x, const LorentzVector& y) {
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("lorentz_inner: dimension mismatch (" + std::to_string(x.dimension()) +
                                " vs " + std::to_string(y.dimension()) + ")");
  }
  const auto& a = x.coords();
  const auto& b = y.coords();
  return -a[0] * b[0] + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;

  int order() const { return positives + negatives + zeros; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Symmetric matrix (-cos theta_ij) with unit diagonal.
class GramMatrix {
 public:
  explicit GramMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    constexpr double tol = 1e-12;
    const auto n = entries_.rows();
    if (n < 4 || entries_.cols() != n) {
      throw std::invalid_argument("GramMatrix: must be square of order at least 4");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(entries_(i, i) - 1.0) > tol) {
        throw std::invalid_argument("GramMatrix: diagonal entries must be 1");
      }
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (std::abs(entries_(i, j) - entries_(j, i)) > tol) {
          throw std::invalid_argument("GramMatrix: not symmetric");
        }
        if (std::abs(entries_(i, j)) > 1.0 + tol) {
          throw std::invalid_argument("GramMatrix: off-diagonal entries must lie in [-1, 1]");
        }
      }
    }
  }

  int order() const { return static_cast<int>(entries_.rows()); }
  double operator()(int i, int j) const { return entries_(i, j); }
  const Eigen::MatrixXd& matrix() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

inline GramMatrix gram_from_angles(const DihedralAngles& angles) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  for (EdgeLabel label : kAllEdges) {
    const auto [i, j] = facet_pair(label);
    g(i, j) = g(j, i) = -std::cos(angles[label]);
  }
  return GramMatrix(std::move(g));
}

namespace detail {

inline constexpr int kMaxExpansionOrder = 5;

// Laplace expansion along the first listed row.
template <class Derived>
double expand_minor(const Eigen::MatrixBase<Derived>& m, std::span<const int> rows,
                    std::span<const int> cols) {
  const std::size_t n = rows.size();
  if (n == 0) return 1.0;
  if (n == 1) return m(rows[0], cols[0]);
  if (n == 2) return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  std::array<int, kMaxExpansionOrder> sub{};
  double sum = 0.0;
  double sign = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != k) sub[w++] = cols[c];
    }
    const double entry = m(rows[0], cols[k]);
    if (entry != 0.0) {
      sum += sign * entry * expand_minor(m, rows.subspan(1), std::span<const int>(sub.data(), n - 1));
    }
    sign = -sign;
  }
  return sum;
}

template <class Derived>
double minor_determinant(const Eigen::MatrixBase<Derived>& m, std::span<const int> rows,
                         std::span<const int> cols) {
  if (rows.size() <= static_cast<std::size_t>(kMaxExpansionOrder)) return expand_minor(m, rows, cols);
  Eigen::MatrixXd sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = m(rows[r], cols[c]);
  }
  return sub.fullPivLu().determinant();
}

inline void check_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols || rows == 0) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

}  // namespace detail

/// Determinant; direct cofactor expansion up to order 5, pivoted LU beyond.
template <class Derived>
double determinant(const Eigen::MatrixBase<Derived>& m) {
  detail::check_square(m.rows(), m.cols(), "determinant");
  const auto n = static_cast<int>(m.rows());
  std::vector<int> idx(n);
  for (int k = 0; k < n; ++k) idx[k] = k;
  return detail::minor_determinant(m, idx, idx);
}

/// c_ij = (-1)^(i+j) det(m with row i and column j removed). Indices are 0-based.
template <class Derived>
double cofactor(const Eigen::MatrixBase<Derived>& m, int i, int j) {
  detail::check_square(m.rows(), m.cols(), "cofactor");
  const auto n = static_cast<int>(m.rows());
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("cofactor: index out of range");
  std::vector<int> rows;
  std::vector<int> cols;
  for (int k = 0; k < n; ++k) {
    if (k != i) rows.push_back(k);
    if (k != j) cols.push_back(k);
  }
  const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
  return sign * detail::minor_determinant(m, rows, cols);
}

template <class Derived>
Eigen::MatrixXd cofactor_matrix(const Eigen::MatrixBase<Derived>& m) {
  const auto n = static_cast<int>(m.rows());
  Eigen::MatrixXd c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = cofactor(m, i, j);
  }
  return c;
}

inline double determinant(const GramMatrix& g) { return determinant(g.matrix()); }
inline double cofactor(const GramMatrix& g, int i, int j) { return cofactor(g.matrix(), i, j); }
inline Eigen::MatrixXd cofactor_matrix(const GramMatrix& g) { return cofactor_matrix(g.matrix()); }

template <class Derived>
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.eval(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Eigenvalues within eps * max|eigenvalue| of zero count as zero.
template <class Derived>
Signature signature(const Eigen::MatrixBase<Derived>& m, double eps = 1e-9) {
  const Eigen::VectorXd ev = symmetric_eigenvalues(m);
  const double threshold = eps * ev.cwiseAbs().maxCoeff();
  Signature s;
  for (double lambda : ev) {
    if (lambda > threshold) {
      ++s.positives;
    } else if (lambda < -threshold) {
      ++s.negatives;
    } else {
      ++s.zeros;
    }
  }
  return s;
}

inline Signature signature(const GramMatrix& g, double eps = 1e-9) { return signature(g.matrix(), eps); }

/// Lorentz boost taking the future unit timelike vector p to (1, 0, ..., 0).
inline Eigen::MatrixXd boost_to_rest(const LorentzVector& p) {
  const double gamma = p.time();
  if (!(gamma > 0.0) || std::abs(lorentz_inner(p, p) + 1.0) > 1e-9) {
    throw std::invalid_argument("boost_to_rest: expected a future unit timelike vector");
  }
  const auto n = p.coords().size();
  const Eigen::VectorXd spatial = p.coords().tail(n - 1);
  Eigen::MatrixXd b(n, n);
  b(0, 0) = gamma;
  b.block(0, 1, 1, n - 1) = -spatial.transpose();
  b.block(1, 0, n - 1, 1) = -spatial;
  b.block(1, 1, n - 1, n - 1) =
      Eigen::MatrixXd::Identity(n - 1, n - 1) + spatial * spatial.transpose() / (gamma + 1.0);
  return b;
}

inline LorentzVector transformed(const Eigen::MatrixXd& map, const LorentzVector& x) {
  return LorentzVector(map * x.coords());
}

}  // namespace hypervol
