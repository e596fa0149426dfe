#include "radg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace radg {

ApolloniusLocus apollonius_locus(const Vec3& evader, const Vec3& pursuer, SpeedRatio alpha,
                                 double coincidence_radius) {
  if (!is_supported(alpha)) {
    throw UnsupportedRegime("Apollonius locus requested for speed ratio above one");
  }
  const Vec3 sep = evader - pursuer;
  const double d = norm(sep);
  if (!(d > coincidence_radius) || d == 0.0) {
    throw DegenerateGeometry("evader and pursuer positions coincide");
  }
  if (is_equal_speed(alpha)) {
    return Plane{sep / d, (norm_sq(evader) - norm_sq(pursuer)) / (2.0 * d)};
  }
  const double a2 = alpha.value * alpha.value;
  const double denom = 1.0 - a2;
  return Sphere{(evader - a2 * pursuer) / denom, alpha.value * d / denom};
}

ClosestPoint closest_point_to_origin(const ApolloniusLocus& locus) {
  if (const auto* plane = std::get_if<Plane>(&locus)) {
    return {plane->unit_normal * plane->offset, std::abs(plane->offset)};
  }
  const auto& sphere = std::get<Sphere>(locus);
  const double rc = norm(sphere.center);
  if (!(rc > sphere.radius)) {
    throw RegionMismatch("target lies inside the Apollonius sphere");
  }
  return {sphere.center * (1.0 - sphere.radius / rc), rc - sphere.radius};
}

double locus_residual(const Vec3& x, const Vec3& evader, const Vec3& pursuer, SpeedRatio alpha) {
  return alpha.value * alpha.value * norm_sq(x - pursuer) - norm_sq(x - evader);
}

std::vector<Vec3> fibonacci_sphere(std::size_t count) {
  std::vector<Vec3> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < count; ++k) {
    const double z = count == 1 ? 0.0 : 1.0 - 2.0 * (static_cast<double>(k) + 0.5) /
                                                  static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(k);
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

std::vector<Vec3> sample_locus(const ApolloniusLocus& locus, std::size_t count,
                               double plane_extent) {
  std::vector<Vec3> out;
  out.reserve(count);
  if (const auto* sphere = std::get_if<Sphere>(&locus)) {
    for (const Vec3& u : fibonacci_sphere(count)) out.push_back(sphere->center + sphere->radius * u);
    return out;
  }
  const auto& plane = std::get<Plane>(locus);
  const Vec3 n = plane.unit_normal;
  // Any vector not parallel to n seeds an orthonormal basis of the plane.
  const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = cross(n, seed) / norm(cross(n, seed));
  const Vec3 e2 = cross(n, e1);
  const Vec3 base = n * plane.offset;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < count; ++k) {
    const double r = plane_extent * std::sqrt((static_cast<double>(k) + 0.5) /
                                              static_cast<double>(count));
    const double phi = golden * static_cast<double>(k);
    out.push_back(base + e1 * (r * std::cos(phi)) + e2 * (r * std::sin(phi)));
  }
  return out;
}

}  // namespace radg
