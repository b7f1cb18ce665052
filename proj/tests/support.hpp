#pragma once

// Shared fixtures, random generators and independent oracles for the test
// suites. Nothing here calls into the closed-form derivative code.

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "sphwhitney/barycentric.hpp"
#include "sphwhitney/errors.hpp"
#include "sphwhitney/geom.hpp"

namespace sphwhitney::testing {

inline constexpr double kPi = std::numbers::pi;

inline SphericalTriangle octant() { return make_triangle(unit_x(), unit_y(), unit_z()); }

inline UnitVector3 octant_centroid() { return normalize(Vec3(1, 1, 1)); }

/// First figure's triangle with A normalized to unit length.
inline SphericalTriangle figure1_triangle() {
  return make_triangle(normalize(Vec3(1, 0, 2)), normalize(Vec3(2, 1, 3)), unit_z());
}

/// Equilateral triangle: A = (e_x + e_z)/sqrt(2) and its z rotations by 2pi/3, 4pi/3.
inline SphericalTriangle equilateral_triangle() {
  const double third = 2.0 * kPi / 3.0;
  return make_triangle(normalize(Vec3(1, 0, 1)), normalize(Vec3(std::cos(third), std::sin(third), 1)),
                       normalize(Vec3(std::cos(2 * third), std::sin(2 * third), 1)));
}

/// Sliver with a 1e-2 rad angle at the pole.
inline SphericalTriangle thin_triangle() {
  constexpr double angle = 1e-2;
  return make_triangle(unit_z(), unit_x(), normalize(Vec3(std::cos(angle), std::sin(angle), 0)));
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  UnitVector3 unit() {
    for (;;) {
      const Vec3 v(normal_(rng_), normal_(rng_), normal_(rng_));
      if (v.norm() > 1e-6) return normalize(v);
    }
  }

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Rejection-sampled unit triple that passes make_triangle.
  SphericalTriangle triangle() {
    for (;;) {
      try {
        return make_triangle(unit(), unit(), unit());
      } catch (const GeometryError&) {
      }
    }
  }

  /// Random point strictly inside t: positive planar weights in the cone,
  /// bounded away from the edges.
  UnitVector3 interior_point(const SphericalTriangle& t, double min_det = 1e-4) {
    for (;;) {
      const double wa = uniform(0.02, 1.0), wb = uniform(0.02, 1.0), wc = uniform(0.02, 1.0);
      const UnitVector3 x = normalize(wa * t.va().vec() + wb * t.vb().vec() + wc * t.vc().vec());
      bool ok = true;
      for (VertexLabel v : kVertices) ok = ok && sub_determinant(t, x, v) > min_det;
      if (ok) return x;
    }
  }

  /// Unit tangent vector at x.
  Vec3 tangent(const UnitVector3& x) { return normalize(project_tangent(unit().vec(), x)).vec(); }

  Eigen::Matrix3d rotation() {
    Eigen::Quaterniond q(normal_(rng_), normal_(rng_), normal_(rng_), normal_(rng_));
    q.normalize();
    return q.toRotationMatrix();
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

/// exp_x(w) ~ normalize(x + w), second-order accurate for small tangent w.
inline UnitVector3 exp_map(const UnitVector3& x, const Vec3& w) { return normalize(x.vec() + w); }

/// Central difference of f along tangent v at x.
template <typename F>
double central_difference(F&& f, const UnitVector3& x, const Vec3& v, double h = 1e-5) {
  return (f(exp_map(x, h * v)) - f(exp_map(x, -h * v))) / (2.0 * h);
}

inline double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline UnitVector3 rotate(const Eigen::Matrix3d& r, const UnitVector3& v) { return normalize(r * v.vec()); }

}  // namespace sphwhitney::testing
