#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphwhitney {

/// Domain failures raised by the geometry, area and form routines.
enum class ErrorKind {
  ZeroVector,
  NonPositiveOrientation,
  AntipodalVertices,
  AntipodalPoint,
  OutsideTriangle,
  DegenerateSubTriangle,
  PoleProximity,
  SubDeterminantZero,
  NonFiniteSample,
  NumericalCorruption,
};

[[nodiscard]] constexpr std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonPositiveOrientation: return "NonPositiveOrientation";
    case ErrorKind::AntipodalVertices: return "AntipodalVertices";
    case ErrorKind::AntipodalPoint: return "AntipodalPoint";
    case ErrorKind::OutsideTriangle: return "OutsideTriangle";
    case ErrorKind::DegenerateSubTriangle: return "DegenerateSubTriangle";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::SubDeterminantZero: return "SubDeterminantZero";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::NumericalCorruption: return "NumericalCorruption";
  }
  return "Unknown";
}

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sphwhitney
