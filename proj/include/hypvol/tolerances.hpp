#pragma once

namespace hypvol {

// Numeric thresholds used across the library.  The defaults leave enough
// double-precision headroom for products of canonical matrices coming from
// words of length <= 40.
struct Tolerances {
  double det = 1e-12;        // |ad - bc - 1| allowed after normalization
  double classify = 1e-9;    // trace-based classification boundary
  double rank = 1e-9;        // singular values below this count as zero
  double degenerate = 1e-13; // chordal distance treated as coincidence
};

inline constexpr double kTolDet = 1e-12;
inline constexpr double kTolClass = 1e-9;
inline constexpr double kTolRank = 1e-9;
inline constexpr double kTolDegenerate = 1e-13;

// Maximal volume of a hyperbolic tetrahedron (regular ideal one).
inline constexpr double kV3 = 1.0149416064096536;

// Margulis constant for H^3: the literature lower bound; the true constant is
// unknown and any smaller value only strengthens certificates.
inline constexpr double kMu3 = 0.104;

} // namespace hypvol
