#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "hypervol/oracle.hpp"
#include "hypervol/volume.hpp"

using namespace hypervol;
using std::numbers::pi;

namespace {

HalfSpaceSystem system_for(double theta) { return halfspaces_from_shape(construct_shape(DihedralAngles::regular(theta))); }

// The same region after the ball isometry (x, y, z) -> (y, x, z).
HalfSpaceSystem swap_xy(const HalfSpaceSystem& sys) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(4, 4);
  p(1, 1) = p(2, 2) = 0.0;
  p(1, 2) = p(2, 1) = 1.0;
  HalfSpaceSystem out;
  for (const auto& h : sys.facets) out.facets.emplace_back(transformed(p, h.normal()));
  for (const auto& h : sys.truncations) out.truncations.emplace_back(transformed(p, h.normal()));
  out.truncated_vertices = sys.truncated_vertices;
  return out;
}

}  // namespace

TEST(HalfSpace, RequiresUnitSpacelikeNormal) {
  EXPECT_THROW(HalfSpace(LorentzVector{1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(HalfSpace(LorentzVector{0, 2, 0, 0}), std::invalid_argument);
  const HalfSpace h(LorentzVector{0, 1, 0, 0});
  EXPECT_LT(h.evaluate({-0.5, 0, 0}), 0.0);
  EXPECT_GT(h.evaluate({0.5, 0, 0}), 0.0);
}

TEST(HalfSpacesFromShape, CompactHasOnlyFacets) {
  const auto sys = system_for(1.2);
  EXPECT_EQ(sys.facets.size(), 4u);
  EXPECT_TRUE(sys.truncations.empty());
}

TEST(HalfSpacesFromShape, IdealHasNoTruncation) {
  const auto sys = system_for(pi / 3);
  EXPECT_EQ(sys.all().size(), 4u);
}

TEST(HalfSpacesFromShape, OctahedronTruncationsArePerpendicular) {
  const auto sys = system_for(0.0);
  ASSERT_EQ(sys.all().size(), 8u);
  ASSERT_EQ(sys.truncated_vertices.size(), 4u);
  for (std::size_t t = 0; t < sys.truncations.size(); ++t) {
    const int v = sys.truncated_vertices[t];
    for (int f = 0; f < 4; ++f) {
      if (f == v) continue;
      // Facets through vertex v meet its polar plane at angle pi/2.
      EXPECT_NEAR(lorentz_inner(sys.truncations[t].normal(), sys.facets[f].normal()), 0.0, 1e-9);
    }
  }
}

TEST(HalfSpacesFromShape, RandomTruncationsPerpendicularToAdjacentFacets) {
  const DihedralAngles a{0.3, 0.5, 0.4, 0.6, 0.2, 0.7};
  ASSERT_TRUE(is_valid(a));
  const auto sys = halfspaces_from_shape(construct_shape(a));
  for (std::size_t t = 0; t < sys.truncations.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      if (f == sys.truncated_vertices[t]) continue;
      EXPECT_NEAR(lorentz_inner(sys.truncations[t].normal(), sys.facets[f].normal()), 0.0, 1e-9);
    }
  }
}

TEST(KleinVertices, CompactRegionInsideBall) {
  const auto sys = system_for(1.2);
  const auto verts = klein_vertices(sys);
  EXPECT_EQ(verts.size(), 4u);
  for (const auto& p : verts) EXPECT_LT(p.norm(), 1.0);
  const double r = default_r_max(sys);
  EXPECT_GT(r, 0.0);
  EXPECT_LT(r, 1.0);
}

TEST(McVolume, CompactAgreesWithFormula) {
  const auto sys = system_for(1.2);
  const McEstimate e = mc_volume(sys, 2'000'000, 7, default_r_max(sys));
  const double v = tetra_volume(DihedralAngles::regular(1.2)).volume;
  EXPECT_LT(std::abs(e.volume - v), 4.0 * e.std_error);
  EXPECT_LT(std::abs(e.volume - v) / v, 0.01);
  EXPECT_EQ(e.samples, 2'000'000);
  EXPECT_EQ(e.seed, 7u);
  EXPECT_GT(e.accepted, 0);
}

TEST(McVolume, RandomCompactAgreesWithFormula) {
  const DihedralAngles a{1.1, 1.3, 1.2, 1.25, 1.15, 1.35};
  ASSERT_TRUE(is_valid(a));
  const auto sys = halfspaces_from_shape(construct_shape(a));
  const McEstimate e = mc_volume(sys, 2'000'000, 8, default_r_max(sys));
  EXPECT_LT(std::abs(e.volume - tetra_volume(a).volume), 4.0 * e.std_error);
}

TEST(McVolume, TruncatedAgreesWithFormula) {
  const DihedralAngles a = DihedralAngles::regular(0.3);
  const auto sys = halfspaces_from_shape(construct_shape(a));
  const McEstimate e = mc_volume(sys, 2'000'000, 9, default_r_max(sys));
  EXPECT_LT(std::abs(e.volume - tetra_volume(a).volume), 4.0 * e.std_error);
}

TEST(McVolume, EmptyRegionThrows) {
  HalfSpaceSystem sys;
  sys.facets.emplace_back(LorentzVector{0, 1, 0, 0});                          // x <= 0
  sys.facets.emplace_back(LorentzVector{-std::sinh(0.5), -std::cosh(0.5), 0, 0});  // x >= tanh(0.5)
  EXPECT_THROW(mc_volume(sys, 100000, 1, 1.0), EmptyRegion);
}

TEST(McVolume, RejectsBadArguments) {
  const auto sys = system_for(1.2);
  EXPECT_THROW(mc_volume(sys, 0, 1, 0.5), std::invalid_argument);
  EXPECT_THROW(mc_volume(sys, 10, 1, 0.0), std::invalid_argument);
}

TEST(McVolume, DeterministicForAnyThreadCount) {
  const auto sys = system_for(1.1);
  const double r = default_r_max(sys);
  const McEstimate a = mc_volume(sys, 300'000, 42, r, 1);
  const McEstimate b = mc_volume(sys, 300'000, 42, r, 1);
  const McEstimate c = mc_volume(sys, 300'000, 42, r, 3);
  EXPECT_EQ(a.volume, b.volume);
  EXPECT_EQ(a.volume, c.volume);
  EXPECT_EQ(a.std_error, c.std_error);
  EXPECT_EQ(a.accepted, c.accepted);
  EXPECT_NE(a.volume, mc_volume(sys, 300'000, 43, r, 1).volume);
}

TEST(McVolume, StandardErrorScalesWithInverseRootSamples) {
  const auto sys = system_for(1.2);
  const double r = default_r_max(sys);
  const McEstimate a = mc_volume(sys, 1'000'000, 5, r);
  const McEstimate b = mc_volume(sys, 2'000'000, 5, r);
  const double ratio = b.std_error / a.std_error;
  EXPECT_NEAR(ratio, 1.0 / std::sqrt(2.0), 0.2 / std::sqrt(2.0));
}

TEST(McVolume, AgreesOnImageUnderCoordinateSwap) {
  const auto sys = system_for(0.9);
  const auto image = swap_xy(sys);
  const McEstimate a = mc_volume(sys, 1'000'000, 11, default_r_max(sys));
  const McEstimate b = mc_volume(image, 1'000'000, 12, default_r_max(image));
  EXPECT_LT(std::abs(a.volume - b.volume), 3.0 * std::hypot(a.std_error, b.std_error));
}

TEST(ThreadCount, HonoursEnvironmentCap) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  ASSERT_EQ(setenv("HYPERVOL_THREADS", "1", 1), 0);
  EXPECT_EQ(default_thread_count(), 1u);
  ASSERT_EQ(setenv("HYPERVOL_THREADS", "100000", 1), 0);
  EXPECT_EQ(default_thread_count(), hw);
  ASSERT_EQ(setenv("HYPERVOL_THREADS", "garbage", 1), 0);
  EXPECT_GE(default_thread_count(), 1u);
  unsetenv("HYPERVOL_THREADS");
}
