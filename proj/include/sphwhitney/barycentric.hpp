#pragma once

#include "sphwhitney/geom.hpp"
#include "sphwhitney/labels.hpp"

namespace sphwhitney {

/// Areas of the sub-triangles BCX, CAX and ABX cut out by an interior point X.
struct SubAreas {
  double sA = 0;
  double sB = 0;
  double sC = 0;
  double total = 0;

  [[nodiscard]] double operator[](VertexLabel v) const noexcept {
    return v == VertexLabel::A ? sA : v == VertexLabel::B ? sB : sC;
  }
};

/// Spherical barycentric coordinates (Whitney 0-forms) lambda_i = S_i / S.
struct Barycentric {
  double lA = 0;
  double lB = 0;
  double lC = 0;

  [[nodiscard]] double operator[](VertexLabel v) const noexcept {
    return v == VertexLabel::A ? lA : v == VertexLabel::B ? lB : lC;
  }
};

/// det M_v(X): det M(B,C,X) for A, det M(C,A,X) for B, det M(A,B,X) for C.
[[nodiscard]] double sub_determinant(const SphericalTriangle& t, const Vec3& x, VertexLabel v) noexcept;

/// Euler numerator of the sub-triangle opposite v: 1 + B.C + (B + C).X for A.
[[nodiscard]] double sub_euler_numerator(const SphericalTriangle& t, const Vec3& x, VertexLabel v) noexcept;

/// f_A(X) = 2(1 + B.C)(1 + B.X)(1 + C.X), and cyclically for B and C.
/// Throws AntipodalPoint when X is within 1e-9 of the antipode of B or C.
[[nodiscard]] double f_factor(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v);

/// Inside-or-on test: every sub-determinant >= -1e-12.
[[nodiscard]] bool contains(const SphericalTriangle& t, const UnitVector3& x) noexcept;

/// Throws OutsideTriangle for points failing contains() and AntipodalPoint
/// for points at a vertex antipode. A sub-triangle whose determinant is
/// within 1e-12 of zero contributes exactly zero area.
[[nodiscard]] SubAreas sub_areas(const SphericalTriangle& t, const UnitVector3& x);

[[nodiscard]] Barycentric barycentric(const SphericalTriangle& t, const UnitVector3& x);

}  // namespace sphwhitney
