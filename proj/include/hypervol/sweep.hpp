#pragma once

// Volume and edge length along the regular family: all six dihedral angles
// equal to theta, from the ideal octahedron (theta = 0) towards the
// Euclidean limit arccos(1/3).

#include <cmath>
#include <limits>
#include <locale>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervol/shape.hpp"
#include "hypervol/volume.hpp"

namespace hypervol {

/// Common dihedral angle of the Euclidean regular tetrahedron.
inline double euclidean_regular_angle() { return std::acos(1.0 / 3.0); }

struct SweepRow {
  double theta = 0.0;
  double volume = 0.0;
  double edge_length = 0.0;
  VertexClass vertex_class;
};

inline SweepRow regular_row(double theta) {
  const DihedralAngles angles = DihedralAngles::regular(theta);
  const TetrahedronShape shape = construct_shape(angles);
  return {theta, tetra_volume(angles).volume, edge_length(shape, EdgeLabel::A).value, shape.classes[0]};
}

/// theta_k = k arccos(1/3) / N for k = 0..N-1. The grid point closest to
/// pi/3 is moved onto pi/3 so the ideal tetrahedron appears in the table.
inline std::vector<SweepRow> regular_sweep(int steps) {
  if (steps < 2) throw std::invalid_argument("regular_sweep: steps must be at least 2");
  const double top = euclidean_regular_angle();
  const double step = top / steps;
  const int ideal_index = static_cast<int>(std::lround(std::numbers::pi / 3.0 / step));
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double theta = (k == ideal_index) ? std::numbers::pi / 3.0 : k * step;
    rows.push_back(regular_row(theta));
  }
  return rows;
}

/// Locale-independent decimal with 17 significant digits; infinities are
/// written as "inf" / "-inf".
inline std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << x;
  return os.str();
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "theta,volume,edge_length,vertex_class\n";
  for (const auto& r : rows) {
    out << format_real(r.theta) << ',' << format_real(r.volume) << ',' << format_real(r.edge_length) << ','
        << kind_name(r.vertex_class.kind) << '\n';
  }
}

}  // namespace hypervol
