#pragma once

#include <array>

#include "sphwhitney/geom.hpp"
#include "sphwhitney/labels.hpp"

namespace sphwhitney {

/// A 1-form at a point X, stored as an ambient vector; the forms below return
/// it already tangent. Evaluation projects its argument onto the tangent
/// plane first, so apply(V) only sees the part of V with X.V = 0.
struct Covector {
  UnitVector3 base;
  Vec3 coeff;

  [[nodiscard]] double apply(const Vec3& v) const { return coeff.dot(project_tangent(v, base)); }
  /// Tangential part of the representative.
  [[nodiscard]] Vec3 tangent() const { return project_tangent(coeff, base); }
  /// Components against (e1, e2) of a tangent frame at the same base point.
  [[nodiscard]] std::array<double, 2> components(const TangentBasis& frame) const {
    return {apply(frame.e1), apply(frame.e2)};
  }
};

/// coeff (u.dX) ^ (v.dX) at `base`.
struct TwoForm {
  UnitVector3 base;
  double coeff;
  Vec3 u;
  Vec3 v;

  [[nodiscard]] double apply(const Vec3& v1, const Vec3& v2) const {
    const Vec3 t1 = project_tangent(v1, base);
    const Vec3 t2 = project_tangent(v2, base);
    return coeff * (u.dot(t1) * v.dot(t2) - u.dot(t2) * v.dot(t1));
  }
};

/// F_PQ(X) = [1 - Q.(X + P)/(1 + P.X)] P + [1 - P.(X + Q)/(1 + Q.X)] Q for
/// the edge PQ; symmetric in P and Q. Throws AntipodalPoint near -P or -Q.
[[nodiscard]] Vec3 f_vector(const SphericalTriangle& t, const UnitVector3& x, EdgeLabel e);
[[nodiscard]] Vec3 f_vector(const UnitVector3& p, const UnitVector3& q, const UnitVector3& x);

/// dS_v = -F_opp(v) / det M_v(X) . dX, evaluated through d_sub_area_gradient.
/// Throws DegenerateSubTriangle when |det M_v(X)| < 1e-12, i.e. X on the great
/// circle of the edge opposite v.
[[nodiscard]] Covector d_sub_area(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v);

/// dS_v from differentiating S_v = 2 atan2(det M_v, 1 + P.Q + (P + Q).X):
/// 2 [c (P x Q) - s (P + Q)] / (s^2 + c^2). Regular on the opposite edge,
/// where d_sub_area is 0/0.
[[nodiscard]] Covector d_sub_area_gradient(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v);

/// d lambda_v = d_sub_area / S.
[[nodiscard]] Covector d_lambda(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v);

/// lambda_i d lambda_j - lambda_j d lambda_i, equal to
/// (1/S) [lambda_j / det M_i F_opp(i) - lambda_i / det M_j F_opp(j)].
/// Throws DegenerateSubTriangle like d_sub_area.
[[nodiscard]] Covector whitney1(const SphericalTriangle& t, const UnitVector3& x, VertexLabel i, VertexLabel j);

/// Whitney 1-form of the oriented edge e (tail to head).
[[nodiscard]] Covector whitney1(const SphericalTriangle& t, const UnitVector3& x, EdgeLabel e);

/// whitney1 extended continuously to the boundary of the triangle: the same
/// value without the sub-determinant guard.
[[nodiscard]] Covector whitney1_trace(const SphericalTriangle& t, const UnitVector3& x, EdgeLabel e);

/// 2 d lambda_A ^ d lambda_B = 2 / (S^2 det M_A det M_B) (F_BC.dX) ^ (F_CA.dX).
[[nodiscard]] TwoForm whitney2(const SphericalTriangle& t, const UnitVector3& x);

/// Scalar density of the Whitney 2-form against the area form, scaled by S:
/// omega = 2 det M(F_BC, F_CA, X) / (S det M(B,C,X) det M(C,A,X)),
/// computed as 2 det M(dS_A, dS_B, X) / S.
/// Defined on the sphere off the vertex antipodes; throws PoleProximity when
/// 1 + V.X < 1e-9 for a vertex V and SubDeterminantZero when
/// |det M_A| or |det M_B| < 1e-12.
[[nodiscard]] double omega(const SphericalTriangle& t, const UnitVector3& x);

}  // namespace sphwhitney
