#pragma once

#include <complex>
#include <vector>

#include "hypvol/errors.hpp"
#include "hypvol/tolerances.hpp"

namespace hypvol {

using cplx = std::complex<double>;

// Point of CP^1 = boundary of H^3 in homogeneous coordinates (z0 : z1),
// normalized so the max-modulus coordinate equals 1 exactly.
class BoundaryPoint {
public:
  BoundaryPoint() : z0_(0.0), z1_(1.0) {}

  static BoundaryPoint from_value(cplx z) { return homogeneous(z, 1.0); }
  static BoundaryPoint infinity() { return homogeneous(1.0, 0.0); }
  static BoundaryPoint homogeneous(cplx z0, cplx z1);

  cplx z0() const { return z0_; }
  cplx z1() const { return z1_; }

  bool is_infinity(double tol = 1e-14) const { return std::abs(z1_) <= tol; }
  // Finite value z0/z1; call only when not infinity.
  cplx value() const { return z0_ / z1_; }

private:
  cplx z0_, z1_;
};

// Chordal metric on the sphere of diameter 2.
double chordal(const BoundaryPoint &p, const BoundaryPoint &q);

inline bool coincide(const BoundaryPoint &p, const BoundaryPoint &q,
                     double tol = kTolDegenerate) {
  return chordal(p, q) < tol;
}

// Upper half-space model of H^3: horizontal coordinate z, height t > 0.
struct H3Point {
  cplx z;
  double t;
};

// Upper half-plane model of H^2.
struct H2Point {
  cplx w; // Im w > 0
};

// Element of PSL(2,C), stored as a determinant-1 matrix in the canonical
// sign representative: the first entry of (a,b,c,d) with modulus above a
// small threshold has argument in [0, pi).
class ProjectiveIsometry {
public:
  ProjectiveIsometry() : a_(1), b_(0), c_(0), d_(1) {}

  // Normalizes the determinant to 1 and canonicalizes the sign.
  static ProjectiveIsometry from_entries(cplx a, cplx b, cplx c, cplx d);
  static ProjectiveIsometry identity() { return {}; }

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }

  cplx trace() const { return a_ + d_; }
  cplx det() const { return a_ * d_ - b_ * c_; }

  ProjectiveIsometry inverse() const;

  // Max-entry distance to +-identity (min over the two signs).
  double identity_distance() const;
  bool is_identity(double tol = kTolClass) const {
    return identity_distance() <= tol;
  }
  // Max |Im entry| over the canonical representative.
  double imag_magnitude() const;
  bool is_real(double tol = kTolClass) const { return imag_magnitude() <= tol; }

  friend ProjectiveIsometry operator*(const ProjectiveIsometry &g,
                                      const ProjectiveIsometry &h);
  // Max-entry distance between canonical representatives, min over sign.
  friend double distance(const ProjectiveIsometry &g,
                         const ProjectiveIsometry &h);

private:
  cplx a_, b_, c_, d_;
  void canonicalize();
};

inline ProjectiveIsometry compose(const ProjectiveIsometry &g,
                                  const ProjectiveIsometry &h) {
  return g * h;
}

enum class IsometryType { Identity, Elliptic, Parabolic, Loxodromic };

struct IsometryClass {
  IsometryType type = IsometryType::Identity;
  // Loxodromic: complex translation length l + i*theta with l > 0 and
  // theta in (-pi, pi].
  cplx translation_length{0.0, 0.0};
  // Elliptic: unoriented rotation angle in (0, pi].
  double rotation_angle = 0.0;
};

// Trace classification.  Throws AmbiguousClass on the parabolic/identity
// boundary when the matrix itself does not decide.
IsometryClass classify(const ProjectiveIsometry &g, double tol_class = kTolClass);

struct FixedPointSet {
  std::vector<BoundaryPoint> points; // size 1 or 2
  // True when points = [attracting, repelling] (loxodromic case).
  bool labeled = false;
};

FixedPointSet fixed_points(const ProjectiveIsometry &g,
                           double tol_class = kTolClass);

BoundaryPoint apply_boundary(const ProjectiveIsometry &g, const BoundaryPoint &p);
H3Point apply_h3(const ProjectiveIsometry &g, const H3Point &x);
// Requires real entries after canonicalization; throws NotReal otherwise.
H2Point apply_h2(const ProjectiveIsometry &g, const H2Point &x,
                 double tol = kTolClass);

double dist_h3(const H3Point &x, const H3Point &y);
double dist_h2(const H2Point &x, const H2Point &y);

inline double displacement(const ProjectiveIsometry &g, const H3Point &x) {
  return dist_h3(x, apply_h3(g, x));
}

enum class ElementaryClass {
  CommonFixedPoint,
  InvariantGeodesic,
  InvariantPlane,
  FixedInteriorPoint,
  NonElementary,
};

const char *to_string(ElementaryClass c);

// Detectors, in order: tr[A,B] = 2 (common fixed point); shared axis
// endpoint set (invariant geodesic); two elliptics with intersecting axes
// (fixed interior point); tr A, tr B, tr AB all real (invariant plane).
ElementaryClass is_elementary_pair(const ProjectiveIsometry &A,
                                   const ProjectiveIsometry &B,
                                   double tol = kTolClass);

// Variant for real pairs acting on H^2, where preserving the plane is vacuous:
// runs the same detectors minus InvariantPlane, with the fixed-interior-point
// test done inside H^2.  Throws NotReal on non-real input.
ElementaryClass is_elementary_pair_h2(const ProjectiveIsometry &A,
                                      const ProjectiveIsometry &B,
                                      double tol = kTolClass);

} // namespace hypvol
