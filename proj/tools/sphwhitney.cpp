// sphwhitney: areas, Whitney forms and omega grids for spherical triangles.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "sphwhitney/area.hpp"
#include "sphwhitney/barycentric.hpp"
#include "sphwhitney/errors.hpp"
#include "sphwhitney/forms.hpp"
#include "sphwhitney/geom.hpp"
#include "sphwhitney/grid.hpp"
#include "sphwhitney/quadrature.hpp"

namespace {

using namespace sphwhitney;
using Json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kIoError = 3 };

// Thrown for malformed arguments that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// from_chars ignores the global locale, so "0.5" parses the same everywhere.
double parse_real(const std::string& text) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw UsageError("not a real number: '" + text + "'");
  }
  if (!std::isfinite(v)) throw UsageError("non-finite number: '" + text + "'");
  return v;
}

Vec3 parse_vec(const std::vector<std::string>& v, std::size_t offset) {
  return {parse_real(v[offset]), parse_real(v[offset + 1]), parse_real(v[offset + 2])};
}

Json to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

// JSON has no infinities; a diverged residual is written as null.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// Shortest round-trip text; the CSV keeps its fixed 17 digits.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(const Vec3& v) { return fmt(v.x()) + " " + fmt(v.y()) + " " + fmt(v.z()); }

// Vertex input shared by every subcommand: nine reals or a figure preset.
struct TriangleInput {
  std::vector<std::string> coords;
  int figure = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("vertices", coords, "Ax Ay Az Bx By Bz Cx Cy Cz (normalized before use)")->expected(0, 9);
    cmd->add_option("--figure", figure, "Use the triangle of figure 1-6 instead of explicit vertices")
        ->check(CLI::Range(1, 6));
  }

  std::optional<FigurePreset> preset() const {
    if (figure == 0) return std::nullopt;
    return figure_preset(figure);
  }

  SphericalTriangle build() const {
    if (figure != 0) {
      if (!coords.empty()) throw UsageError("--figure cannot be combined with explicit vertices");
      const FigurePreset p = figure_preset(figure);
      return make_triangle(normalize(p.a), normalize(p.b), normalize(p.c));
    }
    if (coords.size() != 9) throw UsageError("expected 9 vertex coordinates or --figure");
    return make_triangle(normalize(parse_vec(coords, 0)), normalize(parse_vec(coords, 3)),
                         normalize(parse_vec(coords, 6)));
  }
};

Json triangle_json(const SphericalTriangle& t) {
  return Json{{"A", to_json(t.va())}, {"B", to_json(t.vb())}, {"C", to_json(t.vc())}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_area(const TriangleInput& in, bool json) {
  const SphericalTriangle t = in.build();
  const AreaReport r = area_report(t);
  if (json) {
    Json areas = Json::object();
    for (AreaMethod m : kAreaMethods) areas[std::string(name(m))] = r.value(m);
    emit(Json{{"triangle", triangle_json(t)},
              {"areas", areas},
              {"angular_excess", r.angular_excess},
              {"max_pairwise_discrepancy", r.max_pairwise_discrepancy},
              {"gram_det", r.gram_det},
              {"semiperimeter_s", r.semiperimeter_s},
              {"semiperimeter_t", r.semiperimeter_t}});
    return kOk;
  }
  for (AreaMethod m : kAreaMethods) std::cout << name(m) << ' ' << fmt(r.value(m)) << '\n';
  std::cout << "angular_excess " << fmt(r.angular_excess) << '\n'
            << "max_pairwise_discrepancy " << fmt(r.max_pairwise_discrepancy) << '\n';
  return kOk;
}

int run_verify(const TriangleInput& in, bool json, int arc_order, int depth) {
  const SphericalTriangle t = in.build();
  const VerificationReport rep = verify_triangle(t, ArcRule{arc_order}, TriangleRule{depth, TriangleRule{}.order});
  if (json) {
    Json rows = Json::array();
    for (const Residual& r : rep.residuals) {
      rows.push_back(Json{{"name", r.name},
                          {"value", finite_or_null(r.value)},
                          {"tolerance", r.tolerance},
                          {"passed", r.passed()}});
    }
    emit(Json{{"triangle", triangle_json(t)},
              {"arc_order", arc_order},
              {"depth", depth},
              {"passed", rep.passed()},
              {"residuals", rows}});
  } else {
    for (const Residual& r : rep.residuals) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ' ' << fmt(r.value) << " < " << fmt(r.tolerance)
                << '\n';
    }
    std::cout << (rep.passed() ? "verify: all residuals within tolerance" : "verify: tolerance exceeded") << '\n';
  }
  return rep.passed() ? kOk : kVerifyFailed;
}

struct GridOptions {
  std::string hemisphere;
  int resolution = 256;
  bool scaled = true;
  std::string out;
};

Json sample_json(const std::optional<GridSample>& s) {
  if (!s) return nullptr;
  return Json{{"x", s->x}, {"y", s->y}, {"z", s->z}, {"value", *s->value}};
}

int run_grid(const TriangleInput& in, bool json, const GridOptions& opt) {
  const SphericalTriangle t = in.build();
  const std::optional<FigurePreset> preset = in.preset();

  Hemisphere h = preset ? preset->hemisphere : Hemisphere::Upper;
  if (opt.hemisphere == "upper") h = Hemisphere::Upper;
  if (opt.hemisphere == "lower") h = Hemisphere::Lower;

  FieldGrid grid = sample_omega_grid(t, h, opt.resolution, opt.scaled);
  if (preset) {
    grid.notes.insert(grid.notes.begin(), "figure=" + std::to_string(preset->figure));
    grid.notes.insert(grid.notes.end(), preset->notes.begin(), preset->notes.end());
  }

  if (opt.out.empty()) {
    write_csv(std::cout, grid);
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + opt.out + "' for writing");
    write_csv(f, grid);
    f.close();
    if (!f) throw IoError("failed writing '" + opt.out + "'");
  }

  if (json) {
    const GridExtrema ex = grid_extrema(grid);
    emit(Json{{"triangle", triangle_json(t)},
              {"area", grid.area},
              {"hemisphere", std::string(name(grid.hemisphere))},
              {"resolution", grid.resolution},
              {"scaled", grid.scaled},
              {"rows", grid.rows.size()},
              {"samples", ex.samples},
              {"guarded", ex.guarded},
              {"min", sample_json(ex.min)},
              {"max", sample_json(ex.max)},
              {"out", opt.out},
              {"notes", grid.notes}});
  }
  return kOk;
}

Json covector_json(const Covector& c, const TangentBasis& frame) {
  const auto comp = c.components(frame);
  return Json{{"coeff", to_json(c.coeff)}, {"components", Json::array({comp[0], comp[1]})}};
}

int run_eval(const TriangleInput& in, bool json, const std::vector<std::string>& point, const std::string& what) {
  const SphericalTriangle t = in.build();
  if (point.size() != 3) throw UsageError("--point needs 3 coordinates");
  const UnitVector3 x = normalize(parse_vec(point, 0));
  const TangentBasis frame = tangent_basis(x);

  Json values = Json::object();
  if (what == "lambda") {
    const Barycentric lam = barycentric(t, x);
    for (VertexLabel v : kVertices) values[std::string(name(v))] = lam[v];
  } else if (what == "dlambda") {
    for (VertexLabel v : kVertices) values[std::string(name(v))] = covector_json(d_lambda(t, x, v), frame);
  } else if (what == "whitney1") {
    for (EdgeLabel e : kEdges) values[std::string(name(e))] = covector_json(whitney1(t, x, e), frame);
  } else {
    const double w = omega(t, x);
    values = Json{{"omega", w}, {"scaled", area(t) * w}};
  }

  const Json doc{{"triangle", triangle_json(t)},
                 {"point", to_json(x)},
                 {"what", what},
                 {"tangent_basis", {{"e1", to_json(frame.e1)}, {"e2", to_json(frame.e2)}}},
                 {"values", values}};
  if (json) {
    emit(doc);
    return kOk;
  }
  for (const auto& [key, val] : values.items()) {
    if (val.is_number()) {
      std::cout << key << ' ' << fmt(val.get<double>()) << '\n';
    } else {
      const auto c = val["coeff"], k = val["components"];
      std::cout << key << " coeff " << fmt(Vec3(c[0].get<double>(), c[1].get<double>(), c[2].get<double>()))
                << " components " << fmt(k[0].get<double>()) << ' ' << fmt(k[1].get<double>()) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Areas, Whitney forms and omega grids for geodesic triangles on the unit sphere"};
  app.require_subcommand(1);

  bool json = false;

  TriangleInput area_in, verify_in, grid_in, eval_in;

  CLI::App* area_cmd = app.add_subcommand("area", "All six area formulas, angular excess and their discrepancy");
  area_in.attach(area_cmd);
  area_cmd->add_flag("--json", json, "Machine-readable output");

  int arc_order = ArcRule{}.order;
  int depth = TriangleRule{}.depth;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Residuals of the Whitney-form identities; exit 1 on failure");
  verify_in.attach(verify_cmd);
  verify_cmd->add_flag("--json", json, "Machine-readable output");
  verify_cmd->add_option("--arc-order", arc_order, "Gauss-Legendre points per edge")
      ->capture_default_str()
      ->check(CLI::Range(2, 64));
  verify_cmd->add_option("--depth", depth, "Triangle subdivision depth")->capture_default_str()->check(CLI::Range(0, 10));

  GridOptions grid_opt;
  CLI::App* grid_cmd = app.add_subcommand("omega-grid", "Sample S*omega on a hemisphere grid as CSV");
  grid_in.attach(grid_cmd);
  grid_cmd->add_flag("--json", json, "Print a JSON summary with extrema; the CSV then needs --out");
  grid_cmd->add_option("--hemisphere", grid_opt.hemisphere, "upper or lower (figure presets pick their own)")
      ->check(CLI::IsMember({"upper", "lower"}));
  grid_cmd->add_option("--resolution", grid_opt.resolution, "n for the n x n grid over [-1, 1]^2")
      ->capture_default_str()
      ->check(CLI::Range(16, 4096));
  grid_cmd->add_option("--scaled", grid_opt.scaled, "true: S*omega, false: omega")->capture_default_str();
  grid_cmd->add_option("--out", grid_opt.out, "CSV path (stdout when omitted)");

  std::vector<std::string> point;
  std::string what = "lambda";
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate lambda, d lambda, Whitney 1-forms or omega at a point");
  eval_in.attach(eval_cmd);
  eval_cmd->add_flag("--json", json, "Machine-readable output");
  eval_cmd->add_option("--point", point, "x y z (normalized before use)")->expected(3)->required();
  eval_cmd->add_option("--what", what, "lambda, dlambda, whitney1 or omega")
      ->capture_default_str()
      ->check(CLI::IsMember({"lambda", "dlambda", "whitney1", "omega"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kInputError;
  }

  try {
    if (*area_cmd) return run_area(area_in, json);
    if (*verify_cmd) return run_verify(verify_in, json, arc_order, depth);
    if (*grid_cmd) {
      if (json && grid_opt.out.empty()) throw UsageError("omega-grid --json needs --out for the CSV");
      return run_grid(grid_in, json, grid_opt);
    }
    if (*eval_cmd) return run_eval(eval_in, json, point, what);
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kInputError;
}
