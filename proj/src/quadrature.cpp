#include "sphwhitney/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/legendre.hpp>

#include "sphwhitney/area.hpp"
#include "sphwhitney/barycentric.hpp"
#include "sphwhitney/errors.hpp"

namespace sphwhitney {

namespace {

/// Neumaier summation; the result depends only on the order of add() calls.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void check_arc_rule(const ArcRule& rule) {
  if (rule.order < 2 || rule.order > 64) {
    throw std::invalid_argument("arc rule order must lie in [2, 64], got " + std::to_string(rule.order));
  }
}

void check_triangle_rule(const TriangleRule& rule) {
  if (rule.depth < 0 || rule.depth > 10) {
    throw std::invalid_argument("subdivision depth must lie in [0, 10], got " + std::to_string(rule.depth));
  }
  if (rule.order < 1 || rule.order > 64) {
    throw std::invalid_argument("cell rule order must lie in [1, 64], got " + std::to_string(rule.order));
  }
}

struct Cell {
  UnitVector3 a, b, c;
};

struct ReferencePoint {
  double u, v, w;
};

std::vector<ReferencePoint> collapsed_rule(int order) {
  const GaussLegendre g = gauss_legendre(order);
  std::vector<ReferencePoint> pts;
  pts.reserve(g.nodes.size() * g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double xi = g.nodes[i];
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      pts.push_back({xi, (1.0 - xi) * g.nodes[j], g.weights[i] * g.weights[j] * (1.0 - xi)});
    }
  }
  return pts;
}

void integrate_cell(const ScalarField& density, const Cell& cell, int depth, const std::vector<ReferencePoint>& rule,
                    CompensatedSum& acc) {
  const Vec3& va = cell.a.vec();
  const Vec3& vb = cell.b.vec();
  const Vec3& vc = cell.c.vec();
  if (1.0 + va.dot(vb) + vb.dot(vc) + vc.dot(va) < 0.0) {
    // Area above pi: the medial cell would stay as large as its parent and the
    // chord plane passes close to the origin. Fan out from the vertex sum first.
    const UnitVector3 g = normalize(va + vb + vc);
    integrate_cell(density, {cell.a, cell.b, g}, depth, rule, acc);
    integrate_cell(density, {cell.b, cell.c, g}, depth, rule, acc);
    integrate_cell(density, {cell.c, cell.a, g}, depth, rule, acc);
    return;
  }
  if (depth > 0) {
    const UnitVector3 d = normalize(cell.a.vec() + cell.b.vec());
    const UnitVector3 e = normalize(cell.b.vec() + cell.c.vec());
    const UnitVector3 f = normalize(cell.c.vec() + cell.a.vec());
    integrate_cell(density, {cell.a, d, f}, depth - 1, rule, acc);
    integrate_cell(density, {d, cell.b, e}, depth - 1, rule, acc);
    integrate_cell(density, {f, e, cell.c}, depth - 1, rule, acc);
    integrate_cell(density, {d, e, f}, depth - 1, rule, acc);
    return;
  }
  const Vec3& a = cell.a.vec();
  const Vec3 ab = cell.b.vec() - a;
  const Vec3 ac = cell.c.vec() - a;
  const double det = det3(cell.a, cell.b, cell.c);
  for (const ReferencePoint& rp : rule) {
    const Vec3 p = a + rp.u * ab + rp.v * ac;
    const double r = p.norm();
    const double value = density(normalize(p));
    if (!std::isfinite(value)) {
      throw GeometryError(ErrorKind::NonFiniteSample, "density returned a non-finite value");
    }
    acc.add(rp.w * value * det / (r * r * r));
  }
}

std::vector<UnitVector3> interior_samples(const SphericalTriangle& t) {
  // Planar lattice weights i + j + k = 7 with all parts >= 1, pushed to the sphere.
  constexpr int n = 7;
  std::vector<UnitVector3> pts;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j < n; ++j) {
      const int k = n - i - j;
      pts.push_back(normalize(i * t.va().vec() + j * t.vb().vec() + k * t.vc().vec()));
    }
  }
  return pts;
}

template <typename F>
double residual_or_inf(F&& f) {
  try {
    return f();
  } catch (const GeometryError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  const auto n = static_cast<unsigned>(order);
  // Nonnegative roots of P_n on [-1, 1], ascending.
  const std::vector<double> roots = boost::math::legendre_p_zeros<double>(static_cast<int>(n));
  std::vector<double> xs;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    if (*it != 0.0) xs.push_back(-*it);
  }
  xs.insert(xs.end(), roots.begin(), roots.end());
  GaussLegendre g;
  for (double x : xs) {
    const double dp = boost::math::legendre_p_prime<double>(static_cast<int>(n), x);
    g.nodes.push_back(0.5 * (x + 1.0));
    g.weights.push_back(1.0 / ((1.0 - x * x) * dp * dp));  // half of 2 / ((1 - x^2) P_n'(x)^2)
  }
  return g;
}

double integrate_arc(const CovectorField& form, const UnitVector3& p, const UnitVector3& q, const ArcRule& rule) {
  check_arc_rule(rule);
  const GaussLegendre g = gauss_legendre(rule.order);
  CompensatedSum acc;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const double s = g.nodes[k];
    const UnitVector3 x = geodesic_point(p, q, s);
    acc.add(g.weights[k] * form(x).apply(geodesic_velocity(p, q, s)));
  }
  return acc.value();
}

double integrate_triangle(const ScalarField& density, const SphericalTriangle& t, const TriangleRule& rule) {
  check_triangle_rule(rule);
  const std::vector<ReferencePoint> ref = collapsed_rule(rule.order);
  CompensatedSum acc;
  integrate_cell(density, {t.va(), t.vb(), t.vc()}, rule.depth, ref, acc);
  return acc.value();
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.passed(); });
}

const Residual& VerificationReport::at(const std::string& name) const {
  for (const Residual& r : residuals) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no residual named " + name);
}

VerificationReport verify_triangle(const SphericalTriangle& t, const ArcRule& arc_rule, const TriangleRule& tri_rule) {
  check_arc_rule(arc_rule);
  check_triangle_rule(tri_rule);
  VerificationReport report;

  for (EdgeLabel path : kEdges) {
    for (EdgeLabel form : kEdges) {
      const double expected = path == form ? 1.0 : 0.0;
      const double r = residual_or_inf([&] {
        const double got = integrate_arc([&](const UnitVector3& x) { return whitney1_trace(t, x, form); },
                                         t.vertex(tail(path)), t.vertex(head(path)), arc_rule);
        return std::abs(got - expected);
      });
      report.residuals.push_back(
          {"arc[" + std::string(name(path)) + "].whitney1[" + std::string(name(form)) + "]", r, verify_tol::kArc});
    }
  }

  const double s = area(t);
  report.residuals.push_back({"surface.whitney2", residual_or_inf([&] {
                                const double got = integrate_triangle(
                                    [&](const UnitVector3& x) { return omega(t, x) / s; }, t, tri_rule);
                                return std::abs(got - 1.0);
                              }),
                              verify_tol::kSurface});

  const std::vector<UnitVector3> samples = interior_samples(t);
  double lambda_sum = 0.0;
  double sub_area_sum = 0.0;
  double cyclic = 0.0;
  const SphericalTriangle bca = t.rotated();
  const SphericalTriangle cab = bca.rotated();
  try {
    for (const UnitVector3& x : samples) {
      const SubAreas sa = sub_areas(t, x);
      const Barycentric lam = barycentric(t, x);
      lambda_sum = std::max(lambda_sum, std::abs(lam.lA + lam.lB + lam.lC - 1.0));
      sub_area_sum = std::max(sub_area_sum, std::abs(sa.sA + sa.sB + sa.sC - sa.total));
      const double w = omega(t, x);
      const double scale = std::max(std::abs(w), 1.0);
      cyclic = std::max({cyclic, std::abs(omega(bca, x) - w) / scale, std::abs(omega(cab, x) - w) / scale});
    }
  } catch (const GeometryError&) {
    lambda_sum = sub_area_sum = cyclic = std::numeric_limits<double>::infinity();
  }
  report.residuals.push_back({"partition.lambda_sum", lambda_sum, verify_tol::kLambdaSum});
  report.residuals.push_back({"partition.sub_area_sum", sub_area_sum, verify_tol::kSubAreaSum});
  report.residuals.push_back({"area.agreement", residual_or_inf([&] { return area_report(t).max_pairwise_discrepancy; }),
                              verify_tol::kAreaAgreement});
  report.residuals.push_back({"omega.cyclic", cyclic, verify_tol::kOmegaCyclic});
  return report;
}

}  // namespace sphwhitney
