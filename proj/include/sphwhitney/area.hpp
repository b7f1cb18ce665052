#pragma once

#include <array>
#include <string_view>

#include "sphwhitney/geom.hpp"

namespace sphwhitney {

/// The six closed-form routes to the area of a geodesic triangle.
enum class AreaMethod {
  Tuynman,          ///< sin(S/2) = det M / sqrt(2(1+A.B)(1+B.C)(1+C.A))
  Euler,            ///< cos(S/2) from the side lengths a, b, c
  Cagnoli,          ///< sin(S/2) from the semi-perimeter s
  MidpointTuynman,  ///< sin(S/2) = det M(D,E,F)
  MidpointCagnoli,  ///< sin(S/2) from the medial semi-perimeter t
  MidpointEuler,    ///< |cos(S/2)| from the medial side lengths d, e, f
};

inline constexpr std::array<AreaMethod, 6> kAreaMethods{
    AreaMethod::Tuynman,         AreaMethod::Euler,           AreaMethod::Cagnoli,
    AreaMethod::MidpointTuynman, AreaMethod::MidpointCagnoli, AreaMethod::MidpointEuler,
};

[[nodiscard]] std::string_view name(AreaMethod m) noexcept;

/// sin(S/2) and cos(S/2) as produced by one method. Sine-type methods pair
/// their own sine with the vector Euler cosine; cosine-type methods pair their
/// own cosine with the Tuynman sine. The pair need not be exactly normalized.
struct HalfAngle {
  double sin_half;
  double cos_half;
};

[[nodiscard]] HalfAngle half_angle(const SphericalTriangle& t, AreaMethod method);

/// Area in steradians, S = 2 atan2(sin(S/2), cos(S/2)); valid on all of (0, 2pi).
[[nodiscard]] double area(const SphericalTriangle& t, AreaMethod method = AreaMethod::Tuynman);

/// The Tuynman sine of the half area.
[[nodiscard]] double tuynman_sin_half(const SphericalTriangle& t);
/// The Euler cosine of the half area written with dot products.
[[nodiscard]] double euler_cos_half(const SphericalTriangle& t);

/// 2 atan2(det, numerator): the area of a triangle from its orientation
/// determinant and Euler numerator 1 + A.B + B.C + C.A. Both may share any
/// positive scale factor.
[[nodiscard]] double area_from_parts(double det, double euler_numerator);

/// det(M^T M) = 1 - cos^2 a - cos^2 b - cos^2 c + 2 cos a cos b cos c.
[[nodiscard]] double gram_det(const SphericalTriangle& t);

struct InteriorAngles {
  double alpha, beta, gamma;
};

/// Interior angles from the spherical law of cosines.
[[nodiscard]] InteriorAngles interior_angles(const SphericalTriangle& t);

/// alpha + beta + gamma - pi.
[[nodiscard]] double angular_excess(const SphericalTriangle& t);

struct AreaReport {
  double s_tuynman = 0;
  double s_euler = 0;
  double s_cagnoli = 0;
  double s_mid_tuynman = 0;
  double s_mid_cagnoli = 0;
  double s_mid_euler = 0;
  double gram_det = 0;
  double semiperimeter_s = 0;  ///< (a + b + c) / 2
  double semiperimeter_t = 0;  ///< (d + e + f) / 2 of the medial triangle
  double angular_excess = 0;
  double max_pairwise_discrepancy = 0;  ///< over all 15 method pairs

  [[nodiscard]] double value(AreaMethod m) const noexcept;
};

[[nodiscard]] AreaReport area_report(const SphericalTriangle& t);

}  // namespace sphwhitney
