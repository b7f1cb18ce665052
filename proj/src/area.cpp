#include "sphwhitney/area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sphwhitney/errors.hpp"

namespace sphwhitney {

namespace {

constexpr double kClampBand = 1e-12;
constexpr double kRadicandFloor = -1e-14;

double checked_unit(double x, const char* what) {
  if (std::abs(x) <= 1.0) return x;
  if (std::abs(x) <= 1.0 + kClampBand) return std::copysign(1.0, x);
  std::ostringstream os;
  os.precision(17);
  os << what << " argument " << x << " outside [-1, 1]";
  throw GeometryError(ErrorKind::NumericalCorruption, os.str());
}

double checked_sqrt(double radicand, const char* what) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= kRadicandFloor) return 0.0;
  std::ostringstream os;
  os.precision(17);
  os << what << " radicand " << radicand << " is negative";
  throw GeometryError(ErrorKind::NumericalCorruption, os.str());
}

// sqrt(2 (1 + A.B)(1 + B.C)(1 + C.A)) with 1 + P.Q = |P + Q|^2 / 2, which keeps
// full relative accuracy when a pair is close to antipodal.
double tuynman_denominator(const SphericalTriangle& t) {
  const Vec3 &a = t.va(), &b = t.vb(), &c = t.vc();
  return 0.5 * (a + b).norm() * (b + c).norm() * (c + a).norm();
}

double euler_numerator(const SphericalTriangle& t) { return 1.0 + t.cos_ab() + t.cos_bc() + t.cos_ca(); }

double half_cos_product(const SideLengths& s) {
  return std::cos(0.5 * s.a) * std::cos(0.5 * s.b) * std::cos(0.5 * s.c);
}

double heron_product(double a, double b, double c) {
  const double s = 0.5 * (a + b + c);
  return std::sin(s) * std::sin(s - a) * std::sin(s - b) * std::sin(s - c);
}

struct MedialSides {
  double d, e, f;
};

MedialSides medial_sides(const SphericalTriangle& t) {
  const auto [mD, mE, mF] = midpoints(t);
  auto arc = [](const UnitVector3& p, const UnitVector3& q) { return std::acos(checked_unit(p.dot(q), "arccos")); };
  return {arc(mE, mF), arc(mF, mD), arc(mD, mE)};
}

double cagnoli_sin_half(const SphericalTriangle& t) {
  const SideLengths s = side_lengths(t);
  return checked_sqrt(heron_product(s.a, s.b, s.c), "Cagnoli") / (2.0 * half_cos_product(s));
}

double side_euler_cos_half(const SphericalTriangle& t) {
  const SideLengths s = side_lengths(t);
  return (1.0 + std::cos(s.a) + std::cos(s.b) + std::cos(s.c)) / (4.0 * half_cos_product(s));
}

double midpoint_tuynman_sin_half(const SphericalTriangle& t) {
  const auto [mD, mE, mF] = midpoints(t);
  return det3(mD, mE, mF);
}

double midpoint_cagnoli_sin_half(const SphericalTriangle& t) {
  const MedialSides m = medial_sides(t);
  return 2.0 * checked_sqrt(heron_product(m.d, m.e, m.f), "medial Cagnoli");
}

double midpoint_euler_cos_half(const SphericalTriangle& t) {
  const MedialSides m = medial_sides(t);
  const double cd = std::cos(m.d), ce = std::cos(m.e), cf = std::cos(m.f);
  const double magnitude = checked_sqrt(cd * cd + ce * ce + cf * cf - 2.0 * cd * ce * cf, "medial Euler");
  // Only the magnitude is available from the medial sides; the sign of cos(S/2)
  // is that of the Euler numerator.
  return std::copysign(magnitude, euler_numerator(t));
}

}  // namespace

std::string_view name(AreaMethod m) noexcept {
  switch (m) {
    case AreaMethod::Tuynman: return "tuynman";
    case AreaMethod::Euler: return "euler";
    case AreaMethod::Cagnoli: return "cagnoli";
    case AreaMethod::MidpointTuynman: return "midpoint_tuynman";
    case AreaMethod::MidpointCagnoli: return "midpoint_cagnoli";
    case AreaMethod::MidpointEuler: return "midpoint_euler";
  }
  return "unknown";
}

double tuynman_sin_half(const SphericalTriangle& t) { return t.det() / tuynman_denominator(t); }

double euler_cos_half(const SphericalTriangle& t) { return euler_numerator(t) / tuynman_denominator(t); }

HalfAngle half_angle(const SphericalTriangle& t, AreaMethod method) {
  switch (method) {
    case AreaMethod::Tuynman: return {tuynman_sin_half(t), euler_cos_half(t)};
    case AreaMethod::Euler: return {tuynman_sin_half(t), side_euler_cos_half(t)};
    case AreaMethod::Cagnoli: return {cagnoli_sin_half(t), euler_cos_half(t)};
    case AreaMethod::MidpointTuynman: return {midpoint_tuynman_sin_half(t), euler_cos_half(t)};
    case AreaMethod::MidpointCagnoli: return {midpoint_cagnoli_sin_half(t), euler_cos_half(t)};
    case AreaMethod::MidpointEuler: return {tuynman_sin_half(t), midpoint_euler_cos_half(t)};
  }
  return {tuynman_sin_half(t), euler_cos_half(t)};
}

double area_from_parts(double det, double euler_numerator) { return 2.0 * std::atan2(det, euler_numerator); }

double area(const SphericalTriangle& t, AreaMethod method) {
  const HalfAngle h = half_angle(t, method);
  checked_unit(h.sin_half, "sin(S/2)");
  checked_unit(h.cos_half, "cos(S/2)");
  return area_from_parts(h.sin_half, h.cos_half);
}

double gram_det(const SphericalTriangle& t) {
  const double ca = t.cos_bc(), cb = t.cos_ca(), cc = t.cos_ab();
  return 1.0 - ca * ca - cb * cb - cc * cc + 2.0 * ca * cb * cc;
}

InteriorAngles interior_angles(const SphericalTriangle& t) {
  const SideLengths s = side_lengths(t);
  const double ca = t.cos_bc(), cb = t.cos_ca(), cc = t.cos_ab();
  const double sa = std::sin(s.a), sb = std::sin(s.b), sc = std::sin(s.c);
  auto angle = [](double num, double den) { return std::acos(checked_unit(num / den, "law of cosines")); };
  return {angle(ca - cb * cc, sb * sc), angle(cb - cc * ca, sc * sa), angle(cc - ca * cb, sa * sb)};
}

double angular_excess(const SphericalTriangle& t) {
  const InteriorAngles g = interior_angles(t);
  return g.alpha + g.beta + g.gamma - std::numbers::pi;
}

double AreaReport::value(AreaMethod m) const noexcept {
  switch (m) {
    case AreaMethod::Tuynman: return s_tuynman;
    case AreaMethod::Euler: return s_euler;
    case AreaMethod::Cagnoli: return s_cagnoli;
    case AreaMethod::MidpointTuynman: return s_mid_tuynman;
    case AreaMethod::MidpointCagnoli: return s_mid_cagnoli;
    case AreaMethod::MidpointEuler: return s_mid_euler;
  }
  return 0.0;
}

AreaReport area_report(const SphericalTriangle& t) {
  AreaReport r;
  r.s_tuynman = area(t, AreaMethod::Tuynman);
  r.s_euler = area(t, AreaMethod::Euler);
  r.s_cagnoli = area(t, AreaMethod::Cagnoli);
  r.s_mid_tuynman = area(t, AreaMethod::MidpointTuynman);
  r.s_mid_cagnoli = area(t, AreaMethod::MidpointCagnoli);
  r.s_mid_euler = area(t, AreaMethod::MidpointEuler);
  r.gram_det = gram_det(t);
  const SideLengths s = side_lengths(t);
  r.semiperimeter_s = 0.5 * (s.a + s.b + s.c);
  const MedialSides m = medial_sides(t);
  r.semiperimeter_t = 0.5 * (m.d + m.e + m.f);
  r.angular_excess = angular_excess(t);
  for (std::size_t i = 0; i < kAreaMethods.size(); ++i) {
    for (std::size_t j = i + 1; j < kAreaMethods.size(); ++j) {
      r.max_pairwise_discrepancy =
          std::max(r.max_pairwise_discrepancy, std::abs(r.value(kAreaMethods[i]) - r.value(kAreaMethods[j])));
    }
  }
  return r;
}

}  // namespace sphwhitney
