#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sphwhitney/geom.hpp"

namespace sphwhitney {

enum class Hemisphere { Upper, Lower };

[[nodiscard]] std::string_view name(Hemisphere h) noexcept;

/// Angular radius of the excluded disc around each vertex antipode.
inline constexpr double kPoleGuardRadius = 1e-3;

struct GridSample {
  double x, y, z;
  /// Empty inside a pole guard band or on the indeterminate locus of omega.
  std::optional<double> value;
};

/// S * omega (or omega) sampled on an n x n grid of cell centres over
/// [-1, 1]^2, lifted to the requested hemisphere; only points with
/// x^2 + y^2 < 1 are kept. Rows are ordered by y, then x, both ascending.
struct FieldGrid {
  Hemisphere hemisphere = Hemisphere::Upper;
  int resolution = 0;
  bool scaled = true;
  Vec3 a, b, c;
  double area = 0;
  std::vector<std::string> notes;
  std::vector<GridSample> rows;
};

/// Throws std::invalid_argument unless 16 <= resolution <= 4096.
[[nodiscard]] FieldGrid sample_omega_grid(const SphericalTriangle& t, Hemisphere hemisphere, int resolution,
                                          bool scaled = true);

/// Versioned CSV: `# sphwhitney omega-grid v1`, `# A=`, `# B=`, `# C=`, `# S=`,
/// `# scaled=`, further `# key=value` comments, then `x,y,z,value`. Floats use
/// 17 significant digits independent of the locale.
void write_csv(std::ostream& out, const FieldGrid& grid);

/// Shortest round-trip text for a double at 17 significant digits.
[[nodiscard]] std::string format_double(double v);

struct GridExtrema {
  std::size_t samples = 0;
  std::size_t guarded = 0;
  std::optional<GridSample> min;
  std::optional<GridSample> max;
};

[[nodiscard]] GridExtrema grid_extrema(const FieldGrid& grid);

/// Triangle and hemisphere of one of the six figure presets.
struct FigurePreset {
  int figure;
  Vec3 a, b, c;
  Hemisphere hemisphere;
  std::vector<std::string> notes;
};

/// Throws std::invalid_argument outside 1..6.
[[nodiscard]] FigurePreset figure_preset(int figure);

}  // namespace sphwhitney
