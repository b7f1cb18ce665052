#include "sphwhitney/forms.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "sphwhitney/area.hpp"
#include "sphwhitney/barycentric.hpp"
#include "sphwhitney/errors.hpp"

namespace sphwhitney {

namespace {

double guarded_sub_determinant(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v) {
  const double det = sub_determinant(t, x, v);
  if (std::abs(det) < tol::kSubDeterminant) {
    std::ostringstream os;
    os.precision(17);
    os << "det M_" << name(v) << "(X) = " << det;
    throw GeometryError(ErrorKind::DegenerateSubTriangle, os.str());
  }
  return det;
}

void guard_edge_antipodes(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v) {
  if (1.0 + t.vertex(next(v)).dot(x) <= tol::kAntipodal || 1.0 + t.vertex(prev(v)).dot(x) <= tol::kAntipodal) {
    throw GeometryError(ErrorKind::AntipodalPoint, "point is antipodal to an edge endpoint");
  }
}

Vec3 d_sub_area_extended(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v) {
  guard_edge_antipodes(t, x, v);
  return d_sub_area_gradient(t, x, v).coeff;
}

}  // namespace

Vec3 f_vector(const UnitVector3& p, const UnitVector3& q, const UnitVector3& x) {
  const double px = 1.0 + p.dot(x);
  const double qx = 1.0 + q.dot(x);
  if (px <= tol::kAntipodal || qx <= tol::kAntipodal) {
    throw GeometryError(ErrorKind::AntipodalPoint, "point is antipodal to an edge endpoint");
  }
  const Vec3& X = x.vec();
  return (1.0 - q.vec().dot(X + p.vec()) / px) * p.vec() + (1.0 - p.vec().dot(X + q.vec()) / qx) * q.vec();
}

Vec3 f_vector(const SphericalTriangle& t, const UnitVector3& x, EdgeLabel e) {
  return f_vector(t.vertex(tail(e)), t.vertex(head(e)), x);
}

Covector d_sub_area(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v) {
  (void)guarded_sub_determinant(t, x, v);
  guard_edge_antipodes(t, x, v);
  // -F/det M_v loses digits near the 0/0 vertex limits; the atan2 gradient is the same covector
  return d_sub_area_gradient(t, x, v);
}

Covector d_sub_area_gradient(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v) {
  const Vec3& p = t.vertex(next(v));
  const Vec3& q = t.vertex(prev(v));
  const double s = det3(p, q, x);
  const double c = 1.0 + p.dot(q) + (p + q).dot(x.vec());
  const double f = s * s + c * c;
  if (f <= 0.0) {
    throw GeometryError(ErrorKind::AntipodalPoint, "sub-area undefined at a vertex antipode");
  }
  return {x, project_tangent(2.0 * (c * p.cross(q) - s * (p + q)) / f, x)};
}

Covector d_lambda(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v) {
  Covector ds = d_sub_area(t, x, v);
  ds.coeff /= area(t);
  return ds;
}

Covector whitney1(const SphericalTriangle& t, const UnitVector3& x, VertexLabel i, VertexLabel j) {
  (void)guarded_sub_determinant(t, x, i);
  (void)guarded_sub_determinant(t, x, j);
  const Barycentric lam = barycentric(t, x);
  const double s = area(t);
  const Vec3 coeff = (lam[i] * d_sub_area_extended(t, x, j) - lam[j] * d_sub_area_extended(t, x, i)) / s;
  return {x, coeff};
}

Covector whitney1(const SphericalTriangle& t, const UnitVector3& x, EdgeLabel e) {
  return whitney1(t, x, tail(e), head(e));
}

Covector whitney1_trace(const SphericalTriangle& t, const UnitVector3& x, EdgeLabel e) {
  const VertexLabel i = tail(e);
  const VertexLabel j = head(e);
  const Barycentric lam = barycentric(t, x);
  const double s = area(t);
  // same expression as whitney1 without the sub-determinant guards
  const Vec3 coeff = (lam[i] * d_sub_area_extended(t, x, j) - lam[j] * d_sub_area_extended(t, x, i)) / s;
  return {x, coeff};
}

TwoForm whitney2(const SphericalTriangle& t, const UnitVector3& x) {
  const double det_a = guarded_sub_determinant(t, x, VertexLabel::A);
  const double det_b = guarded_sub_determinant(t, x, VertexLabel::B);
  const double s = area(t);
  return {x, 2.0 / (s * s * det_a * det_b), f_vector(t, x, EdgeLabel::BC), f_vector(t, x, EdgeLabel::CA)};
}

double omega(const SphericalTriangle& t, const UnitVector3& x) {
  for (VertexLabel v : kVertices) {
    if (std::abs(1.0 + t.vertex(v).dot(x)) < tol::kAntipodal) {
      throw GeometryError(ErrorKind::PoleProximity, "point at the antipode of vertex " + std::string(name(v)));
    }
  }
  const double det_a = sub_determinant(t, x, VertexLabel::A);
  const double det_b = sub_determinant(t, x, VertexLabel::B);
  if (std::abs(det_a) < tol::kSubDeterminant || std::abs(det_b) < tol::kSubDeterminant) {
    std::ostringstream os;
    os.precision(17);
    os << "det M_A(X) = " << det_a << ", det M_B(X) = " << det_b;
    throw GeometryError(ErrorKind::SubDeterminantZero, os.str());
  }
  // F_BC = -det_a dS_A and F_CA = -det_b dS_B, so both sub-determinants cancel.
  // The gradients stay well conditioned where det_a, det_b are small.
  const Vec3 g_a = d_sub_area_gradient(t, x, VertexLabel::A).coeff;
  const Vec3 g_b = d_sub_area_gradient(t, x, VertexLabel::B).coeff;
  return 2.0 * det3(g_a, g_b, x) / area(t);
}

}  // namespace sphwhitney
