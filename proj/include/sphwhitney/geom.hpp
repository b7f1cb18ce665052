#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "sphwhitney/labels.hpp"

namespace sphwhitney {

using Vec3 = Eigen::Vector3d;

namespace tol {
inline constexpr double kUnitNorm = 1e-12;
inline constexpr double kZeroVector = 1e-14;
inline constexpr double kOrientation = 1e-14;
/// Pairwise dot products at or below -1 + kAntipodal are rejected.
inline constexpr double kAntipodal = 1e-9;
/// Sub-determinants within this band of zero mark the degenerate locus.
inline constexpr double kSubDeterminant = 1e-12;
}  // namespace tol

/// A point on the unit sphere. Only obtainable through normalize(), so the
/// unit-norm invariant holds for every instance.
class UnitVector3 {
 public:
  [[nodiscard]] const Vec3& vec() const noexcept { return v_; }
  operator const Vec3&() const noexcept { return v_; }  // NOLINT(google-explicit-constructor)

  [[nodiscard]] double x() const noexcept { return v_.x(); }
  [[nodiscard]] double y() const noexcept { return v_.y(); }
  [[nodiscard]] double z() const noexcept { return v_.z(); }

  [[nodiscard]] double dot(const UnitVector3& o) const noexcept { return v_.dot(o.v_); }
  [[nodiscard]] UnitVector3 operator-() const noexcept { return UnitVector3(-v_); }

  friend UnitVector3 normalize(const Vec3& v);

 private:
  explicit UnitVector3(Vec3 v) noexcept : v_(std::move(v)) {}
  Vec3 v_;
};

/// Throws GeometryError(ZeroVector) when |v| <= 1e-14.
[[nodiscard]] UnitVector3 normalize(const Vec3& v);

[[nodiscard]] UnitVector3 unit_x();
[[nodiscard]] UnitVector3 unit_y();
[[nodiscard]] UnitVector3 unit_z();

/// Determinant of the 3x3 matrix with u, v, w as columns.
[[nodiscard]] double det3(const Vec3& u, const Vec3& v, const Vec3& w) noexcept;

/// Positively oriented geodesic triangle with no antipodal vertex pair.
class SphericalTriangle {
 public:
  [[nodiscard]] const UnitVector3& va() const noexcept { return a_; }
  [[nodiscard]] const UnitVector3& vb() const noexcept { return b_; }
  [[nodiscard]] const UnitVector3& vc() const noexcept { return c_; }
  [[nodiscard]] const UnitVector3& vertex(VertexLabel v) const noexcept;

  /// cos c = A.B
  [[nodiscard]] double cos_ab() const noexcept { return cab_; }
  /// cos a = B.C
  [[nodiscard]] double cos_bc() const noexcept { return cbc_; }
  /// cos b = C.A
  [[nodiscard]] double cos_ca() const noexcept { return cca_; }
  /// det M(A,B,C), strictly positive.
  [[nodiscard]] double det() const noexcept { return det_; }

  /// The same triangle relabelled (B, C, A).
  [[nodiscard]] SphericalTriangle rotated() const;

  friend SphericalTriangle make_triangle(const UnitVector3& a, const UnitVector3& b, const UnitVector3& c);

 private:
  SphericalTriangle(UnitVector3 a, UnitVector3 b, UnitVector3 c, double cab, double cbc, double cca, double det)
      : a_(a), b_(b), c_(c), cab_(cab), cbc_(cbc), cca_(cca), det_(det) {}

  UnitVector3 a_, b_, c_;
  double cab_, cbc_, cca_;
  double det_;
};

/// Throws NonPositiveOrientation when det M(A,B,C) <= 1e-14 and
/// AntipodalVertices when a pairwise dot product is <= -1 + 1e-9.
[[nodiscard]] SphericalTriangle make_triangle(const UnitVector3& a, const UnitVector3& b, const UnitVector3& c);

struct SideLengths {
  double a;  ///< |BC|
  double b;  ///< |CA|
  double c;  ///< |AB|
};

[[nodiscard]] SideLengths side_lengths(const SphericalTriangle& t);

/// Geodesic side midpoints: D on AB, E on BC, F on CA.
struct Midpoints {
  UnitVector3 d, e, f;
};

[[nodiscard]] Midpoints midpoints(const SphericalTriangle& t);

/// Oriented orthonormal frame of the tangent plane at `base`:
/// det M(e1, e2, base) = +1.
struct TangentBasis {
  UnitVector3 base;
  UnitVector3 e1;
  UnitVector3 e2;
};

/// e1 = normalize(k x base) with k = e_z, or e_x when |base.z| > 0.9; e2 = base x e1.
[[nodiscard]] TangentBasis tangent_basis(const UnitVector3& x);

/// Point at fraction s of the great circle arc from p to q (slerp).
/// Throws AntipodalVertices when p.q <= -1 + 1e-9.
[[nodiscard]] UnitVector3 geodesic_point(const UnitVector3& p, const UnitVector3& q, double s);

/// dX/ds of geodesic_point, a tangent vector of length arccos(p.q).
[[nodiscard]] Vec3 geodesic_velocity(const UnitVector3& p, const UnitVector3& q, double s);

/// Removes the component of v along the unit normal n.
[[nodiscard]] inline Vec3 project_tangent(const Vec3& v, const UnitVector3& n) {
  return v - v.dot(n.vec()) * n.vec();
}

}  // namespace sphwhitney
