#include "sphwhitney/barycentric.hpp"

#include <sstream>

#include "sphwhitney/area.hpp"
#include "sphwhitney/errors.hpp"

namespace sphwhitney {

namespace {

void require_off_antipodes(const SphericalTriangle& t, const UnitVector3& x) {
  for (VertexLabel v : kVertices) {
    if (1.0 + t.vertex(v).dot(x) <= tol::kAntipodal) {
      throw GeometryError(ErrorKind::AntipodalPoint,
                          "point is antipodal to vertex " + std::string(name(v)));
    }
  }
}

}  // namespace

double sub_determinant(const SphericalTriangle& t, const Vec3& x, VertexLabel v) noexcept {
  return det3(t.vertex(next(v)), t.vertex(prev(v)), x);
}

double sub_euler_numerator(const SphericalTriangle& t, const Vec3& x, VertexLabel v) noexcept {
  const Vec3& p = t.vertex(next(v));
  const Vec3& q = t.vertex(prev(v));
  return 1.0 + p.dot(q) + (p + q).dot(x);
}

double f_factor(const SphericalTriangle& t, const UnitVector3& x, VertexLabel v) {
  const UnitVector3& p = t.vertex(next(v));
  const UnitVector3& q = t.vertex(prev(v));
  const double px = 1.0 + p.dot(x);
  const double qx = 1.0 + q.dot(x);
  if (px <= tol::kAntipodal || qx <= tol::kAntipodal) {
    throw GeometryError(ErrorKind::AntipodalPoint, "point is antipodal to a vertex of f_" + std::string(name(v)));
  }
  return 2.0 * (1.0 + p.dot(q)) * px * qx;
}

bool contains(const SphericalTriangle& t, const UnitVector3& x) noexcept {
  for (VertexLabel v : kVertices) {
    if (sub_determinant(t, x, v) < -tol::kSubDeterminant) return false;
  }
  return true;
}

SubAreas sub_areas(const SphericalTriangle& t, const UnitVector3& x) {
  require_off_antipodes(t, x);
  double parts[3];
  for (VertexLabel v : kVertices) {
    const double det = sub_determinant(t, x, v);
    if (det < -tol::kSubDeterminant) {
      std::ostringstream os;
      os.precision(17);
      os << "det M_" << name(v) << "(X) = " << det;
      throw GeometryError(ErrorKind::OutsideTriangle, os.str());
    }
    parts[index(v)] = det <= tol::kSubDeterminant ? 0.0 : area_from_parts(det, sub_euler_numerator(t, x, v));
  }
  return {parts[0], parts[1], parts[2], area(t)};
}

Barycentric barycentric(const SphericalTriangle& t, const UnitVector3& x) {
  const SubAreas s = sub_areas(t, x);
  return {s.sA / s.total, s.sB / s.total, s.sC / s.total};
}

}  // namespace sphwhitney
