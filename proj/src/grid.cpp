#include "sphwhitney/grid.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphwhitney/area.hpp"
#include "sphwhitney/errors.hpp"
#include "sphwhitney/forms.hpp"

namespace sphwhitney {

std::string_view name(Hemisphere h) noexcept { return h == Hemisphere::Upper ? "upper" : "lower"; }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

FieldGrid sample_omega_grid(const SphericalTriangle& t, Hemisphere hemisphere, int resolution, bool scaled) {
  if (resolution < 16 || resolution > 4096) {
    throw std::invalid_argument("grid resolution must lie in [16, 4096], got " + std::to_string(resolution));
  }
  FieldGrid grid;
  grid.hemisphere = hemisphere;
  grid.resolution = resolution;
  grid.scaled = scaled;
  grid.a = t.va();
  grid.b = t.vb();
  grid.c = t.vc();
  grid.area = area(t);

  const double guard_cos = std::cos(kPoleGuardRadius);
  const double sign = hemisphere == Hemisphere::Upper ? 1.0 : -1.0;
  const double step = 2.0 / resolution;
  for (int j = 0; j < resolution; ++j) {
    const double y = -1.0 + (j + 0.5) * step;
    for (int i = 0; i < resolution; ++i) {
      const double x = -1.0 + (i + 0.5) * step;
      const double rho2 = x * x + y * y;
      if (rho2 > 1.0 - 1e-12) continue;
      GridSample row{x, y, sign * std::sqrt(1.0 - rho2), std::nullopt};
      const Vec3 p(row.x, row.y, row.z);
      bool guarded = false;
      for (VertexLabel v : kVertices) {
        if (-t.vertex(v).vec().dot(p) > guard_cos) guarded = true;
      }
      if (!guarded) {
        try {
          const double w = omega(t, normalize(p));
          row.value = scaled ? grid.area * w : w;
        } catch (const GeometryError&) {
          // great circle through two vertices: 0/0 in the closed form
        }
      }
      grid.rows.push_back(row);
    }
  }
  return grid;
}

void write_csv(std::ostream& out, const FieldGrid& grid) {
  auto vec = [](const Vec3& v) { return format_double(v.x()) + "," + format_double(v.y()) + "," + format_double(v.z()); };
  out << "# sphwhitney omega-grid v1\n";
  out << "# A=" << vec(grid.a) << "\n";
  out << "# B=" << vec(grid.b) << "\n";
  out << "# C=" << vec(grid.c) << "\n";
  out << "# S=" << format_double(grid.area) << "\n";
  out << "# scaled=" << (grid.scaled ? "true" : "false") << "\n";
  out << "# hemisphere=" << name(grid.hemisphere) << "\n";
  out << "# resolution=" << grid.resolution << "\n";
  for (const std::string& note : grid.notes) out << "# note=" << note << "\n";
  out << "x,y,z,value\n";
  for (const GridSample& r : grid.rows) {
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.z) << ',';
    if (r.value) out << format_double(*r.value);
    out << '\n';
  }
}

GridExtrema grid_extrema(const FieldGrid& grid) {
  GridExtrema ex;
  ex.samples = grid.rows.size();
  for (const GridSample& r : grid.rows) {
    if (!r.value) {
      ++ex.guarded;
      continue;
    }
    if (!ex.min || *r.value < *ex.min->value) ex.min = r;
    if (!ex.max || *r.value > *ex.max->value) ex.max = r;
  }
  return ex;
}

FigurePreset figure_preset(int figure) {
  if (figure < 1 || figure > 6) throw std::invalid_argument("figure preset must be 1..6");
  const Hemisphere hemi = figure % 2 == 1 ? Hemisphere::Upper : Hemisphere::Lower;
  FigurePreset p{figure, {}, {}, {}, hemi, {}};
  if (figure <= 2 || figure >= 5) {
    p.a = Vec3(1, 0, 2) / std::sqrt(5.0);
    p.c = Vec3(0, 0, 1);
    p.notes.push_back("A=(e_x+2e_z)/sqrt(2) as printed is not unit length; A is normalized by sqrt(5)");
    if (figure <= 2) {
      p.b = Vec3(2, 1, 3) / std::sqrt(14.0);
    } else {
      p.b = Vec3(2, 1, -3) / std::sqrt(14.0);
      p.notes.push_back("triangle is (A, B, C) with B=(2,1,-3)/sqrt(14); the marked point is -B, which lies in z>0");
    }
  } else {
    const double r = 1.0 / std::sqrt(2.0);
    const double third = 2.0 * std::numbers::pi / 3.0;
    p.a = Vec3(r, 0, r);
    p.b = Vec3(r * std::cos(third), r * std::sin(third), r);
    p.c = Vec3(r * std::cos(2 * third), r * std::sin(2 * third), r);
  }
  return p;
}

}  // namespace sphwhitney
