#pragma once

#include "hypvol/isometry.hpp"

namespace hypvol {

// Dilogarithm Li_2, accurate to ~1e-15 relative over C.
cplx dilog(cplx z);

// Bloch-Wigner function D(z) = Im Li_2(z) + arg(1-z) log|z|.
// Real-analytic off {0,1,infinity}, continuous value 0 there;
// D(conj z) = -D(z), extrema +-v3 at the sixth roots of unity.
double bloch_wigner(cplx z);
double bloch_wigner(const BoundaryPoint &z);

// Cross ratio [z0:z1:z2:z3]: the image of z3 under the Mobius map taking
// (z0,z1,z2) to (infinity,0,1).  Throws DegenerateFrame when the frame
// points are not pairwise distinct (chordal separation < 1e-13).
BoundaryPoint cross_ratio(const BoundaryPoint &z0, const BoundaryPoint &z1,
                          const BoundaryPoint &z2, const BoundaryPoint &z3);

// Signed volume of the ideal tetrahedron spanned by four boundary points;
// zero as soon as two of them coincide.
double ideal_tet_volume(const BoundaryPoint &z0, const BoundaryPoint &z1,
                        const BoundaryPoint &z2, const BoundaryPoint &z3);

// Volume cocycle with ideal basepoint x: vol of (g0.x, ..., g3.x).
double vol3_cocycle(const BoundaryPoint &x, const ProjectiveIsometry &g0,
                    const ProjectiveIsometry &g1, const ProjectiveIsometry &g2,
                    const ProjectiveIsometry &g3);

// Vertex of a triangle in the closed hyperbolic plane.
struct H2Vertex {
  static H2Vertex finite(cplx w);
  static H2Vertex ideal(double xi);
  static H2Vertex ideal_infinity();

  bool is_ideal = false;
  cplx w{0.0, 1.0};       // finite representative
  bool at_infinity = false; // ideal representative
  double xi = 0.0;
};

// Orientation-signed hyperbolic area: +-(pi - angle sum), counterclockwise
// positive; degenerate configurations give 0, all-ideal nondegenerate +-pi.
double signed_area_h2(const H2Vertex &v0, const H2Vertex &v1,
                      const H2Vertex &v2);

double vol2_cocycle(const H2Vertex &x, const ProjectiveIsometry &g0,
                    const ProjectiveIsometry &g1, const ProjectiveIsometry &g2);

} // namespace hypvol
