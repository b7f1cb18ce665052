// Acceptance suite: one PASS/FAIL line per primary criterion, exit 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sphwhitney/area.hpp"
#include "sphwhitney/barycentric.hpp"
#include "sphwhitney/errors.hpp"
#include "sphwhitney/forms.hpp"
#include "sphwhitney/quadrature.hpp"
#include "support.hpp"

namespace {

using namespace sphwhitney;
using namespace sphwhitney::testing;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and budgets.
constexpr double kOctantArea = 1e-12;
constexpr double kOctantExcess = 1e-10;
constexpr double kMethodAgreement = 1e-10;
constexpr double kPythagorean = 1e-12;
constexpr double kEquivalenceSeconds = 1.0;
constexpr double kFiniteDifference = 1e-5;
constexpr double kFdStep = 1e-5;
constexpr double kArcIdentity = 1e-9;
constexpr int kArcOrder = 32;
constexpr double kArcSeconds = 5.0;
constexpr double kUnitIntegral = 1e-6;
constexpr int kDepth = 4;
constexpr double kOmegaCyclic = 1e-9;
constexpr double kOmegaCentroid = 0.88631;
constexpr double kOmegaCentroidTol = 1e-4;
constexpr double kDensity = 1e-10;
constexpr double kJacobian = 1e-10;
constexpr double kLambdaSum = 1e-12;
constexpr double kSubAreaSum = 1e-10;
constexpr double kVertexDelta = 1e-12;
constexpr double kEdgeVanishing = 1e-10;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS  " : "FAIL  ") << name << "  " << detail << std::endl;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::vector<SphericalTriangle> named_triangles() { return {octant(), figure1_triangle(), equilateral_triangle()}; }

void octant_exactness() {
  const SphericalTriangle t = octant();
  double worst = 0;
  for (AreaMethod m : kAreaMethods) worst = std::max(worst, std::abs(area(t, m) - kPi / 2));
  const double excess = std::abs(angular_excess(t) - kPi / 2);
  report(worst < kOctantArea && excess < kOctantExcess, "octant-exactness",
         "max|S - pi/2| = " + sci(worst) + " (tol " + sci(kOctantArea) + "), |excess - pi/2| = " + sci(excess) +
             " (tol " + sci(kOctantExcess) + ")");
}

void formula_equivalence() {
  const auto start = Clock::now();
  Sampler rng(1001);
  double discrepancy = 0, pythagorean = 0;
  for (int i = 0; i < 1000; ++i) {
    const SphericalTriangle t = rng.triangle();
    discrepancy = std::max(discrepancy, area_report(t).max_pairwise_discrepancy);
    const double s = tuynman_sin_half(t), c = euler_cos_half(t);
    pythagorean = std::max(pythagorean, std::abs(s * s + c * c - 1.0));
  }
  const double elapsed = seconds_since(start);
  report(discrepancy < kMethodAgreement && pythagorean < kPythagorean && elapsed < kEquivalenceSeconds,
         "formula-equivalence",
         "1000 triangles: max pairwise = " + sci(discrepancy) + " (tol " + sci(kMethodAgreement) +
             "), |sin^2 + cos^2 - 1| = " + sci(pythagorean) + " (tol " + sci(kPythagorean) + "), " + sci(elapsed) +
             " s (budget " + sci(kEquivalenceSeconds) + ")");
}

// Central differences of barycentric() along exp_x(hV) = normalize(x + hV);
// error relative to the norm of the analytic gradient.
void gradient_correctness() {
  Sampler rng(1002);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const SphericalTriangle t = rng.triangle();
    const UnitVector3 x = rng.interior_point(t);
    const Vec3 v = rng.tangent(x);
    const Barycentric plus = barycentric(t, normalize(x.vec() + kFdStep * v));
    const Barycentric minus = barycentric(t, normalize(x.vec() - kFdStep * v));
    for (VertexLabel label : kVertices) {
      const Covector d = d_lambda(t, x, label);
      const double fd = (plus[label] - minus[label]) / (2 * kFdStep);
      worst = std::max(worst, std::abs(fd - d.apply(v)) / d.tangent().norm());
    }
  }
  report(worst < kFiniteDifference, "gradient-correctness",
         "100 cases, h = 1e-5: max relative error = " + sci(worst) + " (tol " + sci(kFiniteDifference) + ")");
}

void whitney1_normalization() {
  const auto start = Clock::now();
  double worst = 0;
  for (const SphericalTriangle& t : named_triangles()) {
    for (EdgeLabel path : kEdges) {
      for (EdgeLabel form : kEdges) {
        const auto w = [&](const UnitVector3& x) { return whitney1_trace(t, x, form); };
        const double integral = integrate_arc(w, t.vertex(tail(path)), t.vertex(head(path)), {kArcOrder});
        worst = std::max(worst, std::abs(integral - (path == form ? 1.0 : 0.0)));
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(worst < kArcIdentity && elapsed < kArcSeconds, "whitney1-normalization",
         "octant, figure 1, equilateral at order 32: max |M - I| = " + sci(worst) + " (tol " + sci(kArcIdentity) +
             "), " + sci(elapsed) + " s (budget " + sci(kArcSeconds) + ")");
}

void whitney2_unit_integral() {
  double worst = 0;
  for (const SphericalTriangle& t : named_triangles()) {
    const auto density = [&](const UnitVector3& x) {
      const TangentBasis f = tangent_basis(x);
      return whitney2(t, x).apply(f.e1, f.e2);
    };
    worst = std::max(worst, std::abs(integrate_triangle(density, t, {kDepth}) - 1.0));
  }
  report(worst < kUnitIntegral, "whitney2-unit-integral",
         "depth 4: max |int lambda_ABC - 1| = " + sci(worst) + " (tol " + sci(kUnitIntegral) + ")");
}

void omega_consistency() {
  Sampler rng(1003);
  double cyclic = 0;
  int pairs = 0;
  while (pairs < 1000) {
    const SphericalTriangle t = rng.triangle();
    const UnitVector3 x = rng.unit();
    double w = 0;
    try {
      w = omega(t, x);
    } catch (const GeometryError&) {
      continue;
    }
    const double scale = std::max(std::abs(w), 1e-300);
    cyclic = std::max(cyclic, std::abs(omega(t.rotated(), x) - w) / scale);
    cyclic = std::max(cyclic, std::abs(omega(t.rotated().rotated(), x) - w) / scale);
    ++pairs;
  }

  const double centroid = omega(octant(), octant_centroid());

  double density = 0;
  for (int i = 0; i < 100; ++i) {
    const SphericalTriangle t = rng.triangle();
    const UnitVector3 x = rng.interior_point(t);
    const TangentBasis f = tangent_basis(x);
    density = std::max(density, std::abs(whitney2(t, x).apply(f.e1, f.e2) - omega(t, x) / area(t)));
  }

  const bool ok = cyclic < kOmegaCyclic && std::abs(centroid - kOmegaCentroid) < kOmegaCentroidTol &&
                  density < kDensity;
  std::ostringstream os;
  os.precision(12);
  os << "cyclic rel = " << sci(cyclic) << " (tol " << sci(kOmegaCyclic) << "), centroid = " << centroid
     << " (want " << kOmegaCentroid << " +- " << sci(kOmegaCentroidTol) << "), |whitney2 - omega/S| = " << sci(density)
     << " (tol " << sci(kDensity) << ")";
  report(ok, "omega-consistency", os.str());
}

void quadrature_self_validation() {
  Sampler rng(1004);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const SphericalTriangle t = rng.triangle();
    const double one = integrate_triangle([](const UnitVector3&) { return 1.0; }, t, {kDepth});
    worst = std::max(worst, std::abs(one - area(t, AreaMethod::Tuynman)));
  }
  report(worst < kJacobian, "quadrature-self-validation",
         "100 triangles, depth 4: max |int 1 dA - S| = " + sci(worst) + " (tol " + sci(kJacobian) + ")");
}

void partition_suite() {
  Sampler rng(1005);
  double lambda_sum = 0, sub_sum = 0, delta = 0, vanish = 0;
  for (int i = 0; i < 1000; ++i) {
    const SphericalTriangle t = rng.triangle();
    const UnitVector3 x = rng.interior_point(t);
    const Barycentric lam = barycentric(t, x);
    lambda_sum = std::max(lambda_sum, std::abs(lam.lA + lam.lB + lam.lC - 1.0));
    const SubAreas s = sub_areas(t, x);
    sub_sum = std::max(sub_sum, std::abs(s.sA + s.sB + s.sC - area(t)));
    for (VertexLabel v : kVertices) {
      const Barycentric at = barycentric(t, t.vertex(v));
      for (VertexLabel w : kVertices) delta = std::max(delta, std::abs(at[w] - (v == w ? 1.0 : 0.0)));
    }
    for (EdgeLabel e : kEdges) {
      for (int k = 1; k <= 9; ++k) {
        const UnitVector3 p = geodesic_point(t.vertex(tail(e)), t.vertex(head(e)), k / 10.0);
        vanish = std::max(vanish, std::abs(barycentric(t, p)[opposite(e)]));
      }
    }
  }
  const bool ok =
      lambda_sum < kLambdaSum && sub_sum < kSubAreaSum && delta < kVertexDelta && vanish < kEdgeVanishing;
  report(ok, "partition-suite",
         "1000 triangles: lambda sum " + sci(lambda_sum) + " (tol " + sci(kLambdaSum) + "), sub-area sum " +
             sci(sub_sum) + " (tol " + sci(kSubAreaSum) + "), vertex delta " + sci(delta) + " (tol " +
             sci(kVertexDelta) + "), edge vanishing " + sci(vanish) + " (tol " + sci(kEdgeVanishing) + ")");
}

int shell(const std::string& args) {
  const std::string cmd = std::string("\"") + SPHWHITNEY_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void cli_determinism() {
  const std::string grid = "omega-grid 1 0 0 0 1 0 0 0 1 --out ";
  const int first = shell(grid + "acceptance_grid_1.csv");
  const int second = shell(grid + "acceptance_grid_2.csv");
  const std::string a = slurp("acceptance_grid_1.csv");
  const bool identical = first == 0 && second == 0 && !a.empty() && a == slurp("acceptance_grid_2.csv");
  const int verify = shell("verify 1 0 0 0 1 0 0 0 1");
  report(identical && verify == 0, "cli-determinism",
         std::string("omega-grid twice: ") + (identical ? "byte-identical" : "differs") + " (" +
             std::to_string(a.size()) + " bytes), verify octant exit " + std::to_string(verify));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      octant_exactness,       formula_equivalence,        gradient_correctness, whitney1_normalization,
      whitney2_unit_integral, omega_consistency,          quadrature_self_validation,
      partition_suite,        cli_determinism};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      report(false, "criterion aborted", e.what());
    }
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failures) +
                                                                       " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
