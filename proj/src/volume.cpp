#include "hypvol/volume.hpp"

#include <algorithm>
#include <cmath>

namespace hypvol {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZeta2 = kPi * kPi / 6.0;

// c_k = B_k / (k+1)! for the expansion Li_2(z) = sum c_k u^{k+1},
// u = -log(1-z).  Odd Bernoulli numbers vanish beyond B_1.
const double kLiCoef[] = {
    1.0,                          // B_0 / 1!
    -1.0 / 4.0,                   // B_1 / 2!
    1.0 / 36.0,                   // B_2 / 3!
    -1.0 / 3600.0,                // B_4 / 5!
    1.0 / 211680.0,               // B_6 / 7!
    -1.0 / 10886400.0,            // B_8 / 9!
    1.0 / 526901760.0,            // B_10 / 11!
    -691.0 / 2730.0 / 6227020800.0,           // B_12 / 13!
    7.0 / 6.0 / 1307674368000.0,              // B_14 / 15!
    -3617.0 / 510.0 / 355687428096000.0,      // B_16 / 17!
    43867.0 / 798.0 / 121645100408832000.0,   // B_18 / 19!
    -174611.0 / 330.0 / 51090942171709440000.0,        // B_20 / 21!
    854513.0 / 138.0 / 25852016738884976640000.0,      // B_22 / 23!
    -236364091.0 / 2730.0 / 15511210043330985984000000.0, // B_24 / 25!
    8553103.0 / 6.0 / 10888869450418352160768000000.0,    // B_26 / 27!
};

// Bernoulli-accelerated series; valid after reduction to |z| <= 1,
// Re z <= 1/2 where |u| < 1.26.
cplx dilog_series(cplx z) {
  cplx u = -std::log(1.0 - z);
  cplx u2 = u * u;
  cplx sum = u * kLiCoef[0] + u2 * kLiCoef[1];
  cplx upow = u * u2; // u^{k+1} for k = 2
  for (std::size_t i = 2; i < sizeof(kLiCoef) / sizeof(kLiCoef[0]); ++i) {
    cplx term = upow * kLiCoef[i];
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum))
      break;
    upow *= u2;
  }
  return sum;
}

} // namespace

cplx dilog(cplx z) {
  if (std::abs(z) < 1e-300)
    return z;
  if (z == cplx(1.0, 0.0))
    return {kZeta2, 0.0};
  if (std::abs(z) > 1.0) {
    cplx l = std::log(-z);
    return -dilog(1.0 / z) - kZeta2 - 0.5 * l * l;
  }
  if (z.real() > 0.5)
    return kZeta2 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);
  return dilog_series(z);
}

double bloch_wigner(cplx z) {
  double az = std::abs(z);
  if (az < 1e-300 || std::abs(z - 1.0) < 1e-300 || az > 1e300)
    return 0.0;
  return dilog(z).imag() + std::arg(1.0 - z) * std::log(az);
}

double bloch_wigner(const BoundaryPoint &z) {
  if (z.is_infinity())
    return 0.0;
  return bloch_wigner(z.value());
}

BoundaryPoint cross_ratio(const BoundaryPoint &z0, const BoundaryPoint &z1,
                          const BoundaryPoint &z2, const BoundaryPoint &z3) {
  if (coincide(z0, z1) || coincide(z0, z2) || coincide(z1, z2))
    throw DegenerateFrame("cross_ratio: frame points not pairwise distinct");
  auto det = [](const BoundaryPoint &p, const BoundaryPoint &q) {
    return p.z0() * q.z1() - q.z0() * p.z1();
  };
  // w = (z3-z1)(z2-z0) / ((z3-z0)(z2-z1)), written with homogeneous brackets
  return BoundaryPoint::homogeneous(det(z3, z1) * det(z2, z0),
                                    det(z3, z0) * det(z2, z1));
}

double ideal_tet_volume(const BoundaryPoint &z0, const BoundaryPoint &z1,
                        const BoundaryPoint &z2, const BoundaryPoint &z3) {
  const BoundaryPoint pts[4] = {z0, z1, z2, z3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (coincide(pts[i], pts[j]))
        return 0.0;
  return bloch_wigner(cross_ratio(z0, z1, z2, z3));
}

double vol3_cocycle(const BoundaryPoint &x, const ProjectiveIsometry &g0,
                    const ProjectiveIsometry &g1, const ProjectiveIsometry &g2,
                    const ProjectiveIsometry &g3) {
  return ideal_tet_volume(apply_boundary(g0, x), apply_boundary(g1, x),
                          apply_boundary(g2, x), apply_boundary(g3, x));
}

H2Vertex H2Vertex::finite(cplx w) {
  if (w.imag() <= 0.0)
    throw InvalidInput("H2Vertex: finite point needs Im > 0");
  H2Vertex v;
  v.is_ideal = false;
  v.w = w;
  return v;
}

H2Vertex H2Vertex::ideal(double xi) {
  H2Vertex v;
  v.is_ideal = true;
  v.xi = xi;
  return v;
}

H2Vertex H2Vertex::ideal_infinity() {
  H2Vertex v;
  v.is_ideal = true;
  v.at_infinity = true;
  return v;
}

namespace {

bool vertices_coincide(const H2Vertex &u, const H2Vertex &v) {
  if (u.is_ideal != v.is_ideal)
    return false;
  if (!u.is_ideal)
    return std::abs(u.w - v.w) < 1e-13 * (1.0 + std::abs(u.w));
  if (u.at_infinity || v.at_infinity)
    return u.at_infinity && v.at_infinity;
  return std::abs(u.xi - v.xi) < 1e-13 * (1.0 + std::abs(u.xi));
}

// Initial tangent at finite p of the geodesic toward the other vertex.
cplx tangent_toward(cplx p, const H2Vertex &target) {
  if (target.is_ideal && target.at_infinity)
    return {0.0, 1.0};
  cplx x = target.is_ideal ? cplx(target.xi, 0.0) : target.w;
  double dre = x.real() - p.real();
  if (std::abs(dre) < 1e-14 * (1.0 + std::abs(p) + std::abs(x))) {
    // vertical geodesic
    return (x.imag() > p.imag()) ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  }
  double c = (std::norm(x) - std::norm(p)) / (2.0 * dre);
  cplx t = cplx(0.0, 1.0) * (p - c);
  t /= std::abs(t);
  // arc from p to x subtends less than pi, so the chord picks the sign
  if ((std::conj(t) * (x - p)).real() < 0.0)
    t = -t;
  return t;
}

double interior_angle(const H2Vertex &at, const H2Vertex &u,
                      const H2Vertex &v) {
  if (at.is_ideal)
    return 0.0;
  cplx t1 = tangent_toward(at.w, u);
  cplx t2 = tangent_toward(at.w, v);
  cplx r = std::conj(t1) * t2;
  // atan2 keeps full precision for the tiny angles of long thin triangles
  return std::abs(std::atan2(r.imag(), r.real()));
}

// Cayley transform to the unit disk; ideal points land on the circle.
cplx to_disk(const H2Vertex &v) {
  if (v.is_ideal && v.at_infinity)
    return {1.0, 0.0};
  cplx w = v.is_ideal ? cplx(v.xi, 0.0) : v.w;
  return (w - cplx(0.0, 1.0)) / (w + cplx(0.0, 1.0));
}

// Orientation of the geodesic triangle.  Chord orientation is not Mobius
// invariant, so use the turn between the initial tangents at a finite
// vertex; for all-ideal triangles, the cyclic order on the circle at
// infinity.
double triangle_orientation(const H2Vertex &v0, const H2Vertex &v1,
                            const H2Vertex &v2) {
  const H2Vertex *vs[3] = {&v0, &v1, &v2};
  for (int i = 0; i < 3; ++i) {
    if (vs[i]->is_ideal)
      continue;
    cplx t1 = tangent_toward(vs[i]->w, *vs[(i + 1) % 3]);
    cplx t2 = tangent_toward(vs[i]->w, *vs[(i + 2) % 3]);
    double s = (std::conj(t1) * t2).imag();
    return s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
  }
  double phi[3];
  for (int i = 0; i < 3; ++i)
    phi[i] = std::arg(to_disk(*vs[i]));
  auto mod2pi = [](double x) {
    x = std::fmod(x, 2.0 * kPi);
    return x < 0.0 ? x + 2.0 * kPi : x;
  };
  double d1 = mod2pi(phi[1] - phi[0]);
  double d2 = mod2pi(phi[2] - phi[0]);
  return d1 < d2 ? 1.0 : -1.0;
}

} // namespace

double signed_area_h2(const H2Vertex &v0, const H2Vertex &v1,
                      const H2Vertex &v2) {
  if (vertices_coincide(v0, v1) || vertices_coincide(v0, v2) ||
      vertices_coincide(v1, v2))
    return 0.0;

  double sign = triangle_orientation(v0, v1, v2);
  double angles = interior_angle(v0, v1, v2) + interior_angle(v1, v0, v2) +
                  interior_angle(v2, v0, v1);
  return sign * (kPi - angles);
}

namespace {

H2Vertex apply_vertex(const ProjectiveIsometry &g, const H2Vertex &v) {
  if (!v.is_ideal)
    return H2Vertex::finite(apply_h2(g, {v.w}).w);
  BoundaryPoint b = v.at_infinity ? BoundaryPoint::infinity()
                                  : BoundaryPoint::from_value(v.xi);
  BoundaryPoint img = apply_boundary(g, b);
  if (img.is_infinity())
    return H2Vertex::ideal_infinity();
  return H2Vertex::ideal(img.value().real());
}

} // namespace

double vol2_cocycle(const H2Vertex &x, const ProjectiveIsometry &g0,
                    const ProjectiveIsometry &g1, const ProjectiveIsometry &g2) {
  return signed_area_h2(apply_vertex(g0, x), apply_vertex(g1, x),
                        apply_vertex(g2, x));
}

} // namespace hypvol
