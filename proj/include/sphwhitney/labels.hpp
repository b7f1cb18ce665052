#pragma once

#include <array>
#include <string_view>

namespace sphwhitney {

enum class VertexLabel { A, B, C };

/// Oriented triangle sides; the cyclic order AB, BC, CA matches the column
/// order M(A,B,X), M(B,C,X), M(C,A,X).
enum class EdgeLabel { AB, BC, CA };

inline constexpr std::array<VertexLabel, 3> kVertices{VertexLabel::A, VertexLabel::B, VertexLabel::C};
inline constexpr std::array<EdgeLabel, 3> kEdges{EdgeLabel::AB, EdgeLabel::BC, EdgeLabel::CA};

[[nodiscard]] constexpr VertexLabel next(VertexLabel v) noexcept {
  switch (v) {
    case VertexLabel::A: return VertexLabel::B;
    case VertexLabel::B: return VertexLabel::C;
    case VertexLabel::C: return VertexLabel::A;
  }
  return VertexLabel::A;
}

[[nodiscard]] constexpr VertexLabel prev(VertexLabel v) noexcept { return next(next(v)); }

[[nodiscard]] constexpr int index(VertexLabel v) noexcept { return static_cast<int>(v); }
[[nodiscard]] constexpr int index(EdgeLabel e) noexcept { return static_cast<int>(e); }

/// Tail vertex of the oriented edge (A for AB).
[[nodiscard]] constexpr VertexLabel tail(EdgeLabel e) noexcept { return static_cast<VertexLabel>(index(e)); }
/// Head vertex of the oriented edge (B for AB).
[[nodiscard]] constexpr VertexLabel head(EdgeLabel e) noexcept { return next(tail(e)); }

/// The edge joining the two vertices other than `v` (BC for A).
[[nodiscard]] constexpr EdgeLabel opposite(VertexLabel v) noexcept {
  return static_cast<EdgeLabel>(index(next(v)));
}

/// The vertex not on `e` (C for AB).
[[nodiscard]] constexpr VertexLabel opposite(EdgeLabel e) noexcept { return next(head(e)); }

[[nodiscard]] constexpr std::string_view name(VertexLabel v) noexcept {
  constexpr std::array<std::string_view, 3> names{"A", "B", "C"};
  return names[index(v)];
}

[[nodiscard]] constexpr std::string_view name(EdgeLabel e) noexcept {
  constexpr std::array<std::string_view, 3> names{"AB", "BC", "CA"};
  return names[index(e)];
}

}  // namespace sphwhitney
