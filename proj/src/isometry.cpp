#include "hypvol/isometry.hpp"

#include <algorithm>
#include <cmath>

namespace hypvol {

namespace {

constexpr double kPi = 3.14159265358979323846;

double max4(double a, double b, double c, double d) {
  return std::max(std::max(a, b), std::max(c, d));
}

} // namespace

BoundaryPoint BoundaryPoint::homogeneous(cplx z0, cplx z1) {
  double m0 = std::abs(z0);
  double m1 = std::abs(z1);
  if (m0 == 0.0 && m1 == 0.0)
    throw InvalidInput("BoundaryPoint: both homogeneous coordinates zero");
  BoundaryPoint p;
  if (m0 >= m1) {
    p.z0_ = 1.0;
    p.z1_ = z1 / z0;
  } else {
    p.z0_ = z0 / z1;
    p.z1_ = 1.0;
  }
  return p;
}

double chordal(const BoundaryPoint &p, const BoundaryPoint &q) {
  double np = std::sqrt(std::norm(p.z0()) + std::norm(p.z1()));
  double nq = std::sqrt(std::norm(q.z0()) + std::norm(q.z1()));
  return 2.0 * std::abs(p.z0() * q.z1() - p.z1() * q.z0()) / (np * nq);
}

ProjectiveIsometry ProjectiveIsometry::from_entries(cplx a, cplx b, cplx c,
                                                    cplx d) {
  cplx det = a * d - b * c;
  if (std::abs(det) < 1e-30)
    throw InvalidInput("ProjectiveIsometry: singular matrix");
  cplx s = std::sqrt(det);
  ProjectiveIsometry g;
  g.a_ = a / s;
  g.b_ = b / s;
  g.c_ = c / s;
  g.d_ = d / s;
  g.canonicalize();
  return g;
}

void ProjectiveIsometry::canonicalize() {
  constexpr double pick_tol = 1e-9;
  cplx lead = a_;
  if (std::abs(a_) > pick_tol)
    lead = a_;
  else if (std::abs(b_) > pick_tol)
    lead = b_;
  else if (std::abs(c_) > pick_tol)
    lead = c_;
  else
    lead = d_;
  double arg = std::arg(lead);
  if (arg < 0.0 || arg >= kPi) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ProjectiveIsometry ProjectiveIsometry::inverse() const {
  return from_entries(d_, -b_, -c_, a_);
}

double ProjectiveIsometry::identity_distance() const {
  double plus = max4(std::abs(a_ - 1.0), std::abs(b_), std::abs(c_),
                     std::abs(d_ - 1.0));
  double minus = max4(std::abs(a_ + 1.0), std::abs(b_), std::abs(c_),
                      std::abs(d_ + 1.0));
  return std::min(plus, minus);
}

double ProjectiveIsometry::imag_magnitude() const {
  return max4(std::abs(a_.imag()), std::abs(b_.imag()), std::abs(c_.imag()),
              std::abs(d_.imag()));
}

ProjectiveIsometry operator*(const ProjectiveIsometry &g,
                             const ProjectiveIsometry &h) {
  return ProjectiveIsometry::from_entries(
      g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
      g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
}

double distance(const ProjectiveIsometry &g, const ProjectiveIsometry &h) {
  double plus = max4(std::abs(g.a_ - h.a_), std::abs(g.b_ - h.b_),
                     std::abs(g.c_ - h.c_), std::abs(g.d_ - h.d_));
  double minus = max4(std::abs(g.a_ + h.a_), std::abs(g.b_ + h.b_),
                      std::abs(g.c_ + h.c_), std::abs(g.d_ + h.d_));
  return std::min(plus, minus);
}

IsometryClass classify(const ProjectiveIsometry &g, double tol_class) {
  cplx tr = g.trace();
  cplx t2 = tr * tr;
  bool t2_on_segment = std::abs(t2.imag()) <= tol_class &&
                       t2.real() >= -tol_class && t2.real() <= 4.0 + tol_class;

  IsometryClass out;
  if (!t2_on_segment) {
    // sqrt branch aligned with tr so tr + s does not cancel
    cplx s = std::sqrt(t2 - 4.0);
    if ((std::conj(tr) * s).real() < 0.0)
      s = -s;
    cplx lam = (tr + s) / 2.0; // |lam| >= 1
    cplx tau = 2.0 * std::log(lam);
    double theta = tau.imag();
    theta -= 2.0 * kPi * std::floor((theta + kPi) / (2.0 * kPi));
    out.type = IsometryType::Loxodromic;
    out.translation_length = cplx(tau.real(), theta);
    return out;
  }

  if (t2.real() <= 4.0 - tol_class) {
    out.type = IsometryType::Elliptic;
    double c = std::clamp(std::abs(tr.real()) / 2.0, 0.0, 1.0);
    out.rotation_angle = 2.0 * std::acos(c);
    return out;
  }

  // tr^2 ~ 4: identity, parabolic, or genuinely ambiguous.
  double d = g.identity_distance();
  if (d <= tol_class) {
    out.type = IsometryType::Identity;
    return out;
  }
  if (d >= std::sqrt(tol_class)) {
    out.type = IsometryType::Parabolic;
    return out;
  }
  throw AmbiguousClass("classify: matrix on the parabolic/identity boundary");
}

FixedPointSet fixed_points(const ProjectiveIsometry &g, double tol_class) {
  if (g.is_identity(tol_class))
    throw IdentityHasAllFixed("fixed_points: identity fixes everything");

  FixedPointSet out;
  cplx a = g.a(), b = g.b(), c = g.c(), d = g.d();
  cplx t2 = g.trace() * g.trace();
  bool parabolic_disc = std::abs(t2 - 4.0) <= tol_class;

  if (std::abs(c) <= tol_class) {
    if (std::abs(d - a) <= tol_class || parabolic_disc) {
      out.points = {BoundaryPoint::infinity()};
      return out;
    }
    BoundaryPoint fin = BoundaryPoint::homogeneous(b, d - a);
    // infinity is attracting iff |a| > |d|
    if (std::abs(a) > std::abs(d)) {
      out.points = {BoundaryPoint::infinity(), fin};
    } else {
      out.points = {fin, BoundaryPoint::infinity()};
    }
    out.labeled = std::abs(std::abs(a) - std::abs(d)) > tol_class;
    return out;
  }

  // roots of c z^2 + (d - a) z - b
  cplx r = std::sqrt(t2 - 4.0);
  if ((std::conj(a - d) * r).real() < 0.0)
    r = -r;
  cplx q = (a - d) + r;
  if (parabolic_disc) {
    out.points = {BoundaryPoint::homogeneous(a - d, 2.0 * c)};
    return out;
  }
  cplx num1 = q, den1 = 2.0 * c;
  // Vieta: z1 z2 = -b/c
  cplx num2, den2;
  if (std::abs(q) > 1e-30) {
    num2 = -2.0 * b;
    den2 = q;
  } else {
    num2 = (a - d) - r;
    den2 = 2.0 * c;
  }
  BoundaryPoint p1 = BoundaryPoint::homogeneous(num1, den1);
  BoundaryPoint p2 = BoundaryPoint::homogeneous(num2, den2);
  // c != 0, so both fixed points are finite; attracting one has |c z + d| > 1
  double m1 = std::abs(c * p1.value() + d);
  double m2 = std::abs(c * p2.value() + d);
  if (m1 >= m2) {
    out.points = {p1, p2};
  } else {
    out.points = {p2, p1};
  }
  out.labeled = std::abs(m1 - m2) > tol_class;
  return out;
}

BoundaryPoint apply_boundary(const ProjectiveIsometry &g,
                             const BoundaryPoint &p) {
  return BoundaryPoint::homogeneous(g.a() * p.z0() + g.b() * p.z1(),
                                    g.c() * p.z0() + g.d() * p.z1());
}

H3Point apply_h3(const ProjectiveIsometry &g, const H3Point &x) {
  cplx cz_d = g.c() * x.z + g.d();
  double denom = std::norm(cz_d) + std::norm(g.c()) * x.t * x.t;
  cplx znew = ((g.a() * x.z + g.b()) * std::conj(cz_d) +
               g.a() * std::conj(g.c()) * x.t * x.t) /
              denom;
  return {znew, x.t / denom};
}

H2Point apply_h2(const ProjectiveIsometry &g, const H2Point &x, double tol) {
  if (!g.is_real(tol))
    throw NotReal("apply_h2: matrix is not real");
  double a = g.a().real(), b = g.b().real(), c = g.c().real(),
         d = g.d().real();
  cplx q = c * x.w + d;
  cplx wnew = ((a * x.w + b) * std::conj(q)) / std::norm(q);
  return {wnew};
}

double dist_h3(const H3Point &x, const H3Point &y) {
  double arg = 1.0 + (std::norm(x.z - y.z) + (x.t - y.t) * (x.t - y.t)) /
                         (2.0 * x.t * y.t);
  return std::acosh(std::max(arg, 1.0));
}

double dist_h2(const H2Point &x, const H2Point &y) {
  double arg =
      1.0 + std::norm(x.w - y.w) / (2.0 * x.w.imag() * y.w.imag());
  return std::acosh(std::max(arg, 1.0));
}

const char *to_string(ElementaryClass c) {
  switch (c) {
  case ElementaryClass::CommonFixedPoint:
    return "CommonFixedPoint";
  case ElementaryClass::InvariantGeodesic:
    return "InvariantGeodesic";
  case ElementaryClass::InvariantPlane:
    return "InvariantPlane";
  case ElementaryClass::FixedInteriorPoint:
    return "FixedInteriorPoint";
  case ElementaryClass::NonElementary:
    return "NonElementary";
  }
  return "?";
}

namespace {

bool same_point_set(const std::vector<BoundaryPoint> &s,
                    const std::vector<BoundaryPoint> &t, double tol) {
  if (s.size() != t.size())
    return false;
  if (s.size() == 1)
    return chordal(s[0], t[0]) < tol;
  bool direct = chordal(s[0], t[0]) < tol && chordal(s[1], t[1]) < tol;
  bool swapped = chordal(s[0], t[1]) < tol && chordal(s[1], t[0]) < tol;
  return direct || swapped;
}

// Axes (p1,q1), (p2,q2) intersect in H^3 iff after sending p1->0, q1->infty
// the images of p2, q2 lie on opposite rays through 0.
bool axes_intersect(const BoundaryPoint &p1, const BoundaryPoint &q1,
                    const BoundaryPoint &p2, const BoundaryPoint &q2,
                    double tol) {
  // Mobius sending p1 -> 0, q1 -> infty: z |-> (z - p1)/(z - q1), written
  // homogeneously so infinite endpoints need no special case.
  auto send = [&](const BoundaryPoint &x) -> cplx {
    cplx num = x.z0() * p1.z1() - p1.z0() * x.z1();
    cplx den = x.z0() * q1.z1() - q1.z0() * x.z1();
    // ratio as projective value; den may vanish (x = q1, excluded by caller)
    return num / den;
  };
  cplx u = send(p2);
  cplx v = send(q2);
  cplx w = u / v;
  return std::abs(w.imag()) <= tol * std::abs(w) && w.real() < 0.0;
}

} // namespace

ElementaryClass is_elementary_pair_h2(const ProjectiveIsometry &A,
                                      const ProjectiveIsometry &B, double tol) {
  if (!A.is_real(tol) || !B.is_real(tol))
    throw NotReal("is_elementary_pair_h2: non-real pair");
  ProjectiveIsometry comm = A * B * A.inverse() * B.inverse();
  cplx trc = comm.trace();
  if (std::abs(trc - 2.0) <= tol || std::abs(trc + 2.0) <= tol)
    return ElementaryClass::CommonFixedPoint;

  double point_tol = std::sqrt(tol);
  IsometryClass ca = classify(A, tol);
  IsometryClass cb = classify(B, tol);
  if (ca.type != IsometryType::Elliptic && cb.type != IsometryType::Elliptic) {
    FixedPointSet fa = fixed_points(A, tol);
    FixedPointSet fb = fixed_points(B, tol);
    if (fa.points.size() == 2 && fb.points.size() == 2 &&
        same_point_set(fa.points, fb.points, point_tol))
      return ElementaryClass::InvariantGeodesic;
  }

  if (ca.type == IsometryType::Elliptic && cb.type == IsometryType::Elliptic) {
    // real elliptic fixes one point of H^2
    auto fix_h2 = [&](const ProjectiveIsometry &g) -> cplx {
      double a = g.a().real(), b = g.b().real(), c = g.c().real(),
             d = g.d().real();
      (void)b;
      double tr = a + d;
      double s = std::sqrt(std::max(4.0 - tr * tr, 0.0));
      return {(a - d) / (2.0 * c), std::abs(s / (2.0 * c))};
    };
    cplx pa = fix_h2(A);
    cplx pb = fix_h2(B);
    if (dist_h2({pa}, {pb}) < point_tol)
      return ElementaryClass::FixedInteriorPoint;
  }
  return ElementaryClass::NonElementary;
}

ElementaryClass is_elementary_pair(const ProjectiveIsometry &A,
                                   const ProjectiveIsometry &B, double tol) {
  ProjectiveIsometry comm = A * B * A.inverse() * B.inverse();
  // tr of the commutator is sign-unambiguous (even word)
  cplx trc = comm.trace();
  if (std::abs(trc - 2.0) <= tol || std::abs(trc + 2.0) <= tol)
    return ElementaryClass::CommonFixedPoint;

  double point_tol = std::sqrt(tol);
  FixedPointSet fa = fixed_points(A, tol);
  FixedPointSet fb = fixed_points(B, tol);
  // a common invariant geodesic shows up as an axis-endpoint pair that the
  // other element permutes (fixing both, or swapping them)
  auto preserves_pair = [&](const ProjectiveIsometry &g,
                            const std::vector<BoundaryPoint> &pair) {
    std::vector<BoundaryPoint> image = {apply_boundary(g, pair[0]),
                                        apply_boundary(g, pair[1])};
    return same_point_set(pair, image, point_tol);
  };
  if ((fa.points.size() == 2 && preserves_pair(B, fa.points)) ||
      (fb.points.size() == 2 && preserves_pair(A, fb.points)))
    return ElementaryClass::InvariantGeodesic;

  // the finer fixed-point test runs first: real traces also occur for pairs
  // conjugate into PSU(2), which fix an interior point rather than a plane
  IsometryClass ca = classify(A, tol);
  IsometryClass cb = classify(B, tol);
  if (ca.type == IsometryType::Elliptic && cb.type == IsometryType::Elliptic &&
      fa.points.size() == 2 && fb.points.size() == 2 &&
      axes_intersect(fa.points[0], fa.points[1], fb.points[0], fb.points[1],
                     point_tol))
    return ElementaryClass::FixedInteriorPoint;

  cplx trA = A.trace(), trB = B.trace(), trAB = (A * B).trace();
  if (std::abs(trA.imag()) <= tol && std::abs(trB.imag()) <= tol &&
      std::abs(trAB.imag()) <= tol)
    return ElementaryClass::InvariantPlane;

  return ElementaryClass::NonElementary;
}

} // namespace hypvol
