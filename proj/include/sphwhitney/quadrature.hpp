#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sphwhitney/forms.hpp"
#include "sphwhitney/geom.hpp"

namespace sphwhitney {

/// Gauss-Legendre points per arc, in [2, 64].
struct ArcRule {
  int order = 32;
};

/// Uniform 4-way geodesic-midpoint refinement `depth` levels deep, each cell
/// integrated by a collapsed (Duffy) product of `order`-point Gauss-Legendre
/// rules. All nodes are strictly interior to the cell.
struct TriangleRule {
  int depth = 4;
  int order = 6;
};

/// Nodes and weights on [0, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Throws std::invalid_argument for order < 1.
[[nodiscard]] GaussLegendre gauss_legendre(int order);

using CovectorField = std::function<Covector(const UnitVector3&)>;
using ScalarField = std::function<double(const UnitVector3&)>;

/// Line integral of a 1-form along the minor great circle arc from p to q.
[[nodiscard]] double integrate_arc(const CovectorField& form, const UnitVector3& p, const UnitVector3& q,
                                   const ArcRule& rule = {});

/// Surface integral of a scalar density against the area form. Each cell is
/// the radial projection of its chord triangle, with area element
/// det M(a,b,c) / |p|^3 du dv. Throws NonFiniteSample on a NaN or inf sample.
[[nodiscard]] double integrate_triangle(const ScalarField& density, const SphericalTriangle& t,
                                        const TriangleRule& rule = {});

struct Residual {
  std::string name;
  double value;
  double tolerance;

  [[nodiscard]] bool passed() const noexcept { return value < tolerance; }
};

struct VerificationReport {
  std::vector<Residual> residuals;

  [[nodiscard]] bool passed() const noexcept;
  /// Throws std::out_of_range for an unknown name.
  [[nodiscard]] const Residual& at(const std::string& name) const;
};

namespace verify_tol {
inline constexpr double kArc = 1e-9;
inline constexpr double kSurface = 1e-6;
inline constexpr double kLambdaSum = 1e-12;
inline constexpr double kSubAreaSum = 1e-10;
inline constexpr double kAreaAgreement = 1e-10;
inline constexpr double kOmegaCyclic = 1e-9;
}  // namespace verify_tol

/// Residuals of the defining identities of the Whitney forms of t:
///   arc[e].whitney1[e']   |int over edge e of lambda_e' - delta(e, e')|
///   surface.whitney2      |int omega / S dA - 1|
///   partition.lambda_sum, partition.sub_area_sum, area.agreement,
///   omega.cyclic (relative).
/// Domain errors during evaluation are reported as an infinite residual.
[[nodiscard]] VerificationReport verify_triangle(const SphericalTriangle& t, const ArcRule& arc_rule = {},
                                                 const TriangleRule& tri_rule = {});

}  // namespace sphwhitney
