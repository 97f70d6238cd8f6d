#pragma once

#include <array>
#include <cstdint>

namespace hpfold {

/// Direction code on the 2D triangular lattice, 1..6:
/// 1=Right-Up, 2=Up, 3=Left-Up, 4=Left-Down, 5=Down, 6=Right-Down.
using Dir = std::uint8_t;

inline constexpr int kNumDirs = 6;

constexpr bool is_valid_dir(int d) { return d >= 1 && d <= 6; }

/// Opposite direction; pairs are (1,4), (2,5), (3,6).
constexpr Dir opposite(Dir d) { return static_cast<Dir>((d + 2) % 6 + 1); }

/// Direction rotated by k sextants counter-clockwise in the cyclic order 1..6.
constexpr Dir rotated(Dir d, int k) {
    int r = (d - 1 + k) % 6;
    if (r < 0) r += 6;
    return static_cast<Dir>(r + 1);
}

/// Mirror across the axis of direction 1: fixes 1 and 4, swaps 2<->6 and 3<->5.
constexpr Dir mirrored(Dir d) { return static_cast<Dir>((6 - (d - 1)) % 6 + 1); }

/// Integer axial coordinates; all six neighbors are unit steps.
struct Point {
    int u = 0;
    int v = 0;

    friend constexpr bool operator==(Point a, Point b) { return a.u == b.u && a.v == b.v; }
    friend constexpr bool operator!=(Point a, Point b) { return !(a == b); }
};

// Step vectors, indexed by direction code (slot 0 unused).
inline constexpr std::array<int, 7> kStepU = {0, +1, 0, -1, -1, 0, +1};
inline constexpr std::array<int, 7> kStepV = {0, 0, +1, +1, 0, -1, -1};

constexpr Point step(Point p, Dir d) { return {p.u + kStepU[d], p.v + kStepV[d]}; }

/// The six neighbors of p, in direction order 1..6.
constexpr std::array<Point, 6> neighbors(Point p) {
    std::array<Point, 6> out{};
    for (int d = 1; d <= 6; ++d) out[d - 1] = step(p, static_cast<Dir>(d));
    return out;
}

/// True iff q - p is one of the six unit step vectors.
constexpr bool are_adjacent(Point p, Point q) {
    const int du = q.u - p.u;
    const int dv = q.v - p.v;
    if (du < -1 || du > 1 || dv < -1 || dv > 1) return false;
    return (du != 0 || dv != 0) && du + dv != 2 && du + dv != -2;
}

} // namespace hpfold
