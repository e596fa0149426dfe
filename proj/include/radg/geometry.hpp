#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "radg/core.hpp"

namespace radg {

/// Locus of points the evader and pursuer reach at the same instant, alpha < 1.
struct Sphere {
  Vec3 center;
  double radius{0.0};
};

/// Equal-speed limit of the sphere: the perpendicular bisector of the segment
/// evader-pursuer. Points x on it satisfy dot(unit_normal, x) == offset; the
/// normal points from the pursuer towards the evader.
struct Plane {
  Vec3 unit_normal;
  double offset{0.0};
};

using ApolloniusLocus = std::variant<Sphere, Plane>;

struct ClosestPoint {
  Vec3 point;
  double distance{0.0};
};

/// Throws UnsupportedRegime for alpha > 1 and DegenerateGeometry when the two
/// positions are within `coincidence_radius` of each other.
ApolloniusLocus apollonius_locus(const Vec3& evader, const Vec3& pursuer, SpeedRatio alpha,
                                 double coincidence_radius = 0.0);

/// Point of the locus nearest to the target (the interception point).
/// For a sphere the origin must lie strictly outside, else RegionMismatch.
ClosestPoint closest_point_to_origin(const ApolloniusLocus& locus);

/// Signed residual alpha^2 |x - x_P|^2 - |x - x_E|^2; zero on the locus.
double locus_residual(const Vec3& x, const Vec3& evader, const Vec3& pursuer, SpeedRatio alpha);

/// Deterministic, near-uniform points on the unit sphere.
std::vector<Vec3> fibonacci_sphere(std::size_t count);

/// `count` points on the locus: Fibonacci samples for a sphere, a Fibonacci
/// spiral disc of radius `plane_extent` around the closest point for a plane.
std::vector<Vec3> sample_locus(const ApolloniusLocus& locus, std::size_t count,
                               double plane_extent = 10.0);

}  // namespace radg
