#include "sphwhitney/geom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sphwhitney/errors.hpp"

namespace sphwhitney {

namespace {

std::string describe(const Vec3& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << v.x() << ", " << v.y() << ", " << v.z() << ")";
  return os.str();
}

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

// Arcs shorter than this fall back to linear blending of the endpoints.
constexpr double kShortArc = 1e-12;

}  // namespace

UnitVector3 normalize(const Vec3& v) {
  const double n = v.norm();
  if (!(n > tol::kZeroVector)) {
    throw GeometryError(ErrorKind::ZeroVector, "cannot normalize " + describe(v));
  }
  return UnitVector3(v / n);
}

UnitVector3 unit_x() { return normalize(Vec3::UnitX()); }
UnitVector3 unit_y() { return normalize(Vec3::UnitY()); }
UnitVector3 unit_z() { return normalize(Vec3::UnitZ()); }

double det3(const Vec3& u, const Vec3& v, const Vec3& w) noexcept { return u.dot(v.cross(w)); }

const UnitVector3& SphericalTriangle::vertex(VertexLabel v) const noexcept {
  switch (v) {
    case VertexLabel::A: return a_;
    case VertexLabel::B: return b_;
    case VertexLabel::C: return c_;
  }
  return a_;
}

SphericalTriangle SphericalTriangle::rotated() const {
  return SphericalTriangle(b_, c_, a_, cbc_, cca_, cab_, det_);
}

SphericalTriangle make_triangle(const UnitVector3& a, const UnitVector3& b, const UnitVector3& c) {
  const double det = det3(a, b, c);
  const double cab = a.dot(b);
  const double cbc = b.dot(c);
  const double cca = c.dot(a);
  if (std::min({cab, cbc, cca}) <= -1.0 + tol::kAntipodal) {
    throw GeometryError(ErrorKind::AntipodalVertices,
                        "vertex pair is antipodal (dots " + describe(Vec3(cab, cbc, cca)) + ")");
  }
  if (!(det > tol::kOrientation)) {
    std::ostringstream os;
    os.precision(17);
    os << "det M(A,B,C) = " << det;
    throw GeometryError(ErrorKind::NonPositiveOrientation, os.str());
  }
  return SphericalTriangle(a, b, c, cab, cbc, cca, det);
}

// atan2 keeps full relative accuracy for arcs near 0 and near pi, where acos does not
double arc(const Vec3& p, const Vec3& q, double cpq) { return std::atan2(p.cross(q).norm(), cpq); }

SideLengths side_lengths(const SphericalTriangle& t) {
  return {arc(t.vb(), t.vc(), t.cos_bc()), arc(t.vc(), t.va(), t.cos_ca()), arc(t.va(), t.vb(), t.cos_ab())};
}

Midpoints midpoints(const SphericalTriangle& t) {
  auto mid = [](const UnitVector3& p, const UnitVector3& q, double cpq) {
    return normalize((p.vec() + q.vec()) / std::sqrt(2.0 * (1.0 + cpq)));
  };
  return {mid(t.va(), t.vb(), t.cos_ab()), mid(t.vb(), t.vc(), t.cos_bc()), mid(t.vc(), t.va(), t.cos_ca())};
}

TangentBasis tangent_basis(const UnitVector3& x) {
  const Vec3 seed = std::abs(x.z()) > 0.9 ? Vec3::UnitX() : Vec3::UnitZ();
  UnitVector3 e1 = normalize(seed.cross(x.vec()));
  UnitVector3 e2 = normalize(x.vec().cross(e1.vec()));
  return {x, e1, e2};
}

UnitVector3 geodesic_point(const UnitVector3& p, const UnitVector3& q, double s) {
  const double cpq = p.dot(q);
  if (cpq <= -1.0 + tol::kAntipodal) {
    throw GeometryError(ErrorKind::AntipodalVertices, "geodesic endpoints are antipodal");
  }
  const double theta = clamped_acos(cpq);
  if (theta < kShortArc) {
    return normalize((1.0 - s) * p.vec() + s * q.vec());
  }
  const double st = std::sin(theta);
  return normalize((std::sin((1.0 - s) * theta) * p.vec() + std::sin(s * theta) * q.vec()) / st);
}

Vec3 geodesic_velocity(const UnitVector3& p, const UnitVector3& q, double s) {
  const double cpq = p.dot(q);
  if (cpq <= -1.0 + tol::kAntipodal) {
    throw GeometryError(ErrorKind::AntipodalVertices, "geodesic endpoints are antipodal");
  }
  const double theta = clamped_acos(cpq);
  if (theta < kShortArc) {
    return q.vec() - p.vec();
  }
  const double st = std::sin(theta);
  return theta * (-std::cos((1.0 - s) * theta) * p.vec() + std::cos(s * theta) * q.vec()) / st;
}

}  // namespace sphwhitney
