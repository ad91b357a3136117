#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace hypervol {

/// Edge labels of a tetrahedron. A, B and C sit on the three edges meeting
/// at vertex 4; D, E and F sit on the edges opposite A, B and C.
enum class EdgeLabel { A, B, C, D, E, F };

inline constexpr std::array<EdgeLabel, 6> kAllEdges{EdgeLabel::A, EdgeLabel::B, EdgeLabel::C,
                                                   EdgeLabel::D, EdgeLabel::E, EdgeLabel::F};

constexpr std::string_view label_name(EdgeLabel label) {
  constexpr std::array<std::string_view, 6> names{"A", "B", "C", "D", "E", "F"};
  return names[static_cast<int>(label)];
}

/// Pair of facets (0-based, facet i is opposite vertex i) whose dihedral
/// angle is carried by the edge. This is the Gram matrix layout:
///   G(0,1) = -cos A, G(0,2) = -cos B, G(0,3) = -cos F,
///   G(1,2) = -cos C, G(1,3) = -cos E, G(2,3) = -cos D.
constexpr std::pair<int, int> facet_pair(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::A: return {0, 1};
    case EdgeLabel::B: return {0, 2};
    case EdgeLabel::C: return {1, 2};
    case EdgeLabel::D: return {2, 3};
    case EdgeLabel::E: return {1, 3};
    case EdgeLabel::F: return {0, 3};
  }
  return {0, 1};
}

/// The two vertices joined by the edge: the ones not opposite either facet.
constexpr std::pair<int, int> edge_endpoints(EdgeLabel label) {
  const auto [i, j] = facet_pair(label);
  int first = -1;
  int second = -1;
  for (int k = 0; k < 4; ++k) {
    if (k == i || k == j) continue;
    (first < 0 ? first : second) = k;
  }
  return {first, second};
}

constexpr EdgeLabel label_for_facets(int i, int j) {
  if (i > j) std::swap(i, j);
  for (EdgeLabel label : kAllEdges) {
    if (facet_pair(label) == std::pair{i, j}) return label;
  }
  throw std::out_of_range("label_for_facets: facets must be distinct indices in [0, 4)");
}

/// The six dihedral angles of a generalized tetrahedron, in radians.
struct DihedralAngles {
  double A{};
  double B{};
  double C{};
  double D{};
  double E{};
  double F{};

  static constexpr DihedralAngles regular(double theta) {
    return {theta, theta, theta, theta, theta, theta};
  }

  static constexpr DihedralAngles from_array(const std::array<double, 6>& values) {
    return {values[0], values[1], values[2], values[3], values[4], values[5]};
  }

  constexpr std::array<double, 6> as_array() const { return {A, B, C, D, E, F}; }

  constexpr double operator[](EdgeLabel label) const {
    switch (label) {
      case EdgeLabel::A: return A;
      case EdgeLabel::B: return B;
      case EdgeLabel::C: return C;
      case EdgeLabel::D: return D;
      case EdgeLabel::E: return E;
      case EdgeLabel::F: return F;
    }
    return A;
  }

  constexpr double& operator[](EdgeLabel label) {
    switch (label) {
      case EdgeLabel::A: return A;
      case EdgeLabel::B: return B;
      case EdgeLabel::C: return C;
      case EdgeLabel::D: return D;
      case EdgeLabel::E: return E;
      case EdgeLabel::F: return F;
    }
    return A;
  }

  /// Angle between facets i and j (i != j).
  constexpr double between(int i, int j) const { return (*this)[label_for_facets(i, j)]; }

  /// Every angle lies in [0, pi).
  bool in_domain() const {
    for (double angle : as_array()) {
      if (!(angle >= 0.0 && angle < std::numbers::pi)) return false;
    }
    return true;
  }

  friend constexpr bool operator==(const DihedralAngles&, const DihedralAngles&) = default;
};

/// Relabel the vertices: facet i of the result is facet perm[i] of the input.
inline DihedralAngles permuted(const DihedralAngles& angles, const std::array<int, 4>& perm) {
  DihedralAngles out;
  for (EdgeLabel label : kAllEdges) {
    const auto [i, j] = facet_pair(label);
    out[label] = angles.between(perm[i], perm[j]);
  }
  return out;
}

/// All 24 permutations of {0, 1, 2, 3}, in lexicographic order.
inline std::array<std::array<int, 4>, 24> vertex_permutations() {
  std::array<std::array<int, 4>, 24> perms{};
  std::array<int, 4> p{0, 1, 2, 3};
  std::size_t n = 0;
  do {
    perms[n++] = p;
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

inline constexpr double degrees_to_radians(double degrees) {
  return degrees * std::numbers::pi / 180.0;
}

}  // namespace hypervol
