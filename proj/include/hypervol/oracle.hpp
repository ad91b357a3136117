#pragma once

// Independent Monte-Carlo volume estimate in the projective (Klein) ball.
// The generalized tetrahedron is the intersection of the facet half-spaces
// <x, u_i> <= 0 with the polar truncation half-spaces <x, v_j> <= 0 of its
// ultraideal vertices. Points are drawn uniformly in a Euclidean bounding
// box and weighted by the Klein volume density (1 - |p|^2)^-2.

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hypervol/lorentz.hpp"
#include "hypervol/shape.hpp"

namespace hypervol {

/// The region <x, normal> <= 0, normal on H_S.
class HalfSpace {
 public:
  explicit HalfSpace(LorentzVector normal) : normal_(std::move(normal)) {
    if (std::abs(lorentz_inner(normal_, normal_) - 1.0) > 1e-9) {
      throw std::invalid_argument("HalfSpace: normal must satisfy <n, n> = 1");
    }
  }

  const LorentzVector& normal() const { return normal_; }

  /// Signed value <(1, p), normal> at a Klein-model point p.
  double evaluate(const Eigen::Vector3d& p) const {
    const auto& n = normal_.coords();
    return -n[0] + n[1] * p[0] + n[2] * p[1] + n[3] * p[2];
  }

 private:
  LorentzVector normal_;
};

struct HalfSpaceSystem {
  std::vector<HalfSpace> facets;
  std::vector<HalfSpace> truncations;
  std::vector<int> truncated_vertices;  // vertex index of each truncation plane

  std::vector<HalfSpace> all() const {
    std::vector<HalfSpace> out = facets;
    out.insert(out.end(), truncations.begin(), truncations.end());
    return out;
  }

  bool contains(const Eigen::Vector3d& p, double tol = 0.0) const {
    for (const auto& h : facets) {
      if (h.evaluate(p) > tol) return false;
    }
    for (const auto& h : truncations) {
      if (h.evaluate(p) > tol) return false;
    }
    return true;
  }
};

namespace detail {

// A point to centre the sampling on: the future point at equal distance from
// the four facet planes when it exists, else the normalized sum of the
// finite vertices.
inline std::optional<LorentzVector> sampling_centre(const TetrahedronShape& shape) {
  const Eigen::Matrix4d g = shape.gram.matrix();
  const Eigen::Vector4d alpha = -g.partialPivLu().solve(Eigen::Vector4d::Ones());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(4);
  for (int k = 0; k < 4; ++k) x += alpha[k] * shape.normals[k].coords();
  LorentzVector c(x);
  double n2 = lorentz_inner(c, c);
  if (n2 < 0.0 && c.time() > 0.0) return c / std::sqrt(-n2);

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(4);
  bool any = false;
  for (int i = 0; i < 4; ++i) {
    if (shape.classes[i].kind == VertexKind::Finite) {
      sum += shape.vertices[i].coords();
      any = true;
    }
  }
  if (!any) return std::nullopt;
  LorentzVector f(sum);
  n2 = lorentz_inner(f, f);
  return f / std::sqrt(-n2);
}

}  // namespace detail

/// Facet half-spaces from the outward normals plus one truncation half-space
/// per ultraideal vertex (normal = the vertex's H_S lift). The system is moved
/// by an isometry that brings an interior-ish point to the ball centre.
inline HalfSpaceSystem halfspaces_from_shape(const TetrahedronShape& shape) {
  Eigen::MatrixXd map = Eigen::MatrixXd::Identity(4, 4);
  if (auto centre = detail::sampling_centre(shape)) map = boost_to_rest(*centre);

  HalfSpaceSystem sys;
  for (int i = 0; i < 4; ++i) sys.facets.emplace_back(transformed(map, shape.normals[i]));
  for (int i = 0; i < 4; ++i) {
    if (shape.classes[i].kind == VertexKind::Ultraideal) {
      sys.truncations.emplace_back(transformed(map, shape.vertices[i]));
      sys.truncated_vertices.push_back(i);
    }
  }
  return sys;
}

/// Vertices of the polytope cut out by the system in the Klein chart, found
/// by intersecting every triple of planes and keeping the feasible points.
inline std::vector<Eigen::Vector3d> klein_vertices(const HalfSpaceSystem& sys, double tol = 1e-9) {
  const auto planes = sys.all();
  std::vector<Eigen::Vector3d> out;
  const auto n = planes.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        Eigen::Matrix3d m;
        Eigen::Vector3d rhs;
        std::size_t row = 0;
        for (std::size_t idx : {a, b, c}) {
          const auto& v = planes[idx].normal().coords();
          m.row(row) << v[1], v[2], v[3];
          rhs[row] = v[0];
          ++row;
        }
        Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
        if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-12) continue;
        const Eigen::Vector3d p = lu.solve(rhs);
        if (sys.contains(p, tol) && p.squaredNorm() <= 1.0 + 1e-7) out.push_back(p);
      }
    }
  }
  return out;
}

/// Euclidean radius enclosing the region: max |p| over its Klein vertices
/// plus a 1e-6 margin, capped at 1.
inline double default_r_max(const HalfSpaceSystem& sys) {
  double r = 0.0;
  for (const auto& p : klein_vertices(sys)) r = std::max(r, p.norm());
  return std::min(1.0, r + 1e-6);
}

struct McEstimate {
  double volume = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t accepted = 0;
};

class EmptyRegion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hardware concurrency, capped by HYPERVOL_THREADS when that is a positive
/// integer.
inline unsigned default_thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERVOL_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) return std::min(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

namespace detail {

inline constexpr std::int64_t kMcBlock = 1 << 16;

struct BlockSums {
  std::int64_t accepted = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
};

inline double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Each block draws from its own generator seeded by (seed, block index), so
// the estimate does not depend on how blocks are spread over threads.
inline BlockSums run_block(const HalfSpaceSystem& sys, const Eigen::Vector3d& lo, const Eigen::Vector3d& hi,
                           double r_max, std::uint64_t seed, std::int64_t block, std::int64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 gen(seq);
  const Eigen::Vector3d span = hi - lo;
  const double r2_max = r_max * r_max;
  BlockSums s;
  for (std::int64_t k = 0; k < count; ++k) {
    Eigen::Vector3d p;
    for (int d = 0; d < 3; ++d) p[d] = lo[d] + span[d] * unit_uniform(gen);
    const double r2 = p.squaredNorm();
    if (r2 >= r2_max || r2 >= 1.0 || !sys.contains(p)) continue;
    const double q = 1.0 - r2;
    const double density = 1.0 / (q * q);
    ++s.accepted;
    s.sum += density;
    s.sum_sq += density * density;
  }
  return s;
}

}  // namespace detail

/// Hyperbolic volume of the region by bounding-box rejection sampling.
/// Deterministic in (seed, samples) for any thread count.
inline McEstimate mc_volume(const HalfSpaceSystem& sys, std::int64_t samples, std::uint64_t seed, double r_max,
                            unsigned threads = 0) {
  if (samples <= 0) throw std::invalid_argument("mc_volume: samples must be positive");
  if (!(r_max > 0.0)) throw std::invalid_argument("mc_volume: r_max must be positive");
  r_max = std::min(r_max, 1.0);

  Eigen::Vector3d lo = Eigen::Vector3d::Constant(-r_max);
  Eigen::Vector3d hi = Eigen::Vector3d::Constant(r_max);
  const auto verts = klein_vertices(sys);
  if (!verts.empty()) {
    Eigen::Vector3d vlo = verts.front();
    Eigen::Vector3d vhi = verts.front();
    for (const auto& p : verts) {
      vlo = vlo.cwiseMin(p);
      vhi = vhi.cwiseMax(p);
    }
    lo = lo.cwiseMax((vlo.array() - 1e-9).matrix());
    hi = hi.cwiseMin((vhi.array() + 1e-9).matrix());
  }

  const std::int64_t blocks = (samples + detail::kMcBlock - 1) / detail::kMcBlock;
  std::vector<detail::BlockSums> results(static_cast<std::size_t>(blocks));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t b = next++; b < blocks; b = next++) {
      const std::int64_t count = std::min(detail::kMcBlock, samples - b * detail::kMcBlock);
      results[static_cast<std::size_t>(b)] = detail::run_block(sys, lo, hi, r_max, seed, b, count);
    }
  };
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, blocks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  detail::BlockSums total;
  for (const auto& r : results) {
    total.accepted += r.accepted;
    total.sum += r.sum;
    total.sum_sq += r.sum_sq;
  }
  if (total.accepted == 0) {
    throw EmptyRegion("mc_volume: no sample landed in the region after " + std::to_string(samples) + " draws");
  }
  const double box = (hi - lo).prod();
  const double n = static_cast<double>(samples);
  const double mean = total.sum / n;
  const double var = std::max(0.0, (total.sum_sq / n - mean * mean) * n / std::max(1.0, n - 1.0));
  McEstimate est;
  est.volume = box * mean;
  est.std_error = box * std::sqrt(var / n);
  est.samples = samples;
  est.seed = seed;
  est.accepted = total.accepted;
  return est;
}

}  // namespace hypervol
