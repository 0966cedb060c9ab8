#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "hypvol/kahan.hpp"
#include "hypvol/volume.hpp"

using namespace hypvol;
using testutil::random_boundary;
using testutil::random_isometry;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Brute-force dilogarithm partial sum; for |z| = 1 the imaginary part is an
// alternating-type series, so the tail after N terms is O(1/N^2).
cplx li2_bruteforce(cplx z, long terms) {
  Kahan re, im;
  cplx p = 1.0;
  for (long k = 1; k <= terms; ++k) {
    p *= z;
    cplx t = p / double(k * k);
    re.add(t.real());
    im.add(t.imag());
  }
  return {re.sum(), im.sum()};
}

} // namespace

TEST_CASE("Bloch-Wigner special values") {
  // oracle first: D(i) equals Im Li_2(i) (Catalan's constant)
  double oracle = li2_bruteforce(cplx(0.0, 1.0), 3000000).imag();
  CHECK(std::abs(bloch_wigner(cplx(0.0, 1.0)) - oracle) < 1e-11);
  CHECK(std::abs(oracle - 0.9159655941772190) < 1e-11);

  // maximum at the sixth root of unity
  cplx zeta3 = std::exp(cplx(0.0, kPi / 3.0));
  CHECK(std::abs(bloch_wigner(zeta3) - 1.0149416064) < 1e-9);
  CHECK(std::abs(bloch_wigner(zeta3) - kV3) < 1e-12);

  CHECK(bloch_wigner(cplx(0.5, 0.0)) == 0.0);
  CHECK(bloch_wigner(cplx(0.0, 0.0)) == 0.0);
  CHECK(bloch_wigner(cplx(1.0, 0.0)) == 0.0);
  CHECK(std::abs(bloch_wigner(cplx(2.0, 0.0))) < 1e-13);
  CHECK(std::abs(bloch_wigner(cplx(-3.7, 0.0))) < 1e-13);
}

TEST_CASE("Bloch-Wigner identities") {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    cplx z = rng.box(3.0);
    if (std::abs(z) < 1e-3 || std::abs(z - 1.0) < 1e-3)
      continue;
    double d = bloch_wigner(z);
    CHECK(std::abs(d + bloch_wigner(1.0 / z)) < 1e-10);
    CHECK(std::abs(d + bloch_wigner(1.0 - z)) < 1e-10);
    CHECK(std::abs(d + bloch_wigner(std::conj(z))) < 1e-12);
    CHECK(std::abs(d) <= kV3 + 1e-12);
  }

  // five-term relation
  for (int i = 0; i < 1000; ++i) {
    cplx x = rng.box(1.5), y = rng.box(1.5);
    cplx xy = x * y;
    if (std::abs(1.0 - xy) < 1e-3)
      continue;
    double s = bloch_wigner(x) + bloch_wigner(y) + bloch_wigner(1.0 - xy) +
               bloch_wigner((1.0 - x) / (1.0 - xy)) +
               bloch_wigner((1.0 - y) / (1.0 - xy));
    CHECK(std::abs(s) < 1e-10);
  }
}

TEST_CASE("cross ratio") {
  Rng rng(7);
  BoundaryPoint inf = BoundaryPoint::infinity();
  BoundaryPoint zero = BoundaryPoint::from_value(0.0);
  BoundaryPoint one = BoundaryPoint::from_value(1.0);

  for (int i = 0; i < 100; ++i) {
    cplx z = rng.box(2.0);
    BoundaryPoint w = cross_ratio(inf, zero, one, BoundaryPoint::from_value(z));
    CHECK(chordal(w, BoundaryPoint::from_value(z)) < 1e-12);
  }
  CHECK(chordal(cross_ratio(inf, zero, one, one), one) < 1e-14);

  // Mobius invariance
  for (int i = 0; i < 200; ++i) {
    ProjectiveIsometry g = random_isometry(rng);
    BoundaryPoint p[4];
    for (auto &q : p)
      q = random_boundary(rng);
    if (coincide(p[0], p[1]) || coincide(p[0], p[2]) || coincide(p[1], p[2]))
      continue;
    BoundaryPoint c0 = cross_ratio(p[0], p[1], p[2], p[3]);
    BoundaryPoint c1 = cross_ratio(apply_boundary(g, p[0]), apply_boundary(g, p[1]),
                                   apply_boundary(g, p[2]), apply_boundary(g, p[3]));
    CHECK(chordal(c0, c1) < 1e-9);
  }

  CHECK_THROWS_AS(cross_ratio(zero, zero, one, inf), DegenerateFrame);
}

TEST_CASE("ideal tetrahedron volume") {
  BoundaryPoint inf = BoundaryPoint::infinity();
  BoundaryPoint zero = BoundaryPoint::from_value(0.0);
  BoundaryPoint one = BoundaryPoint::from_value(1.0);
  BoundaryPoint zeta = BoundaryPoint::from_value(std::exp(cplx(0.0, kPi / 3.0)));

  CHECK(std::abs(ideal_tet_volume(inf, zero, one, zeta) - kV3) < 1e-12);
  CHECK(ideal_tet_volume(inf, zero, zero, zeta) == 0.0);

  // alternating under permutations
  Rng rng(11);
  BoundaryPoint p[4] = {inf, zero, one, BoundaryPoint::from_value(cplx(0.3, 1.2))};
  double base = ideal_tet_volume(p[0], p[1], p[2], p[3]);
  int idx[4] = {0, 1, 2, 3};
  auto parity = [](const int *a) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        inv += a[i] > a[j];
    return inv % 2;
  };
  std::sort(idx, idx + 4);
  do {
    double v = ideal_tet_volume(p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]]);
    double expect = parity(idx) ? -base : base;
    CHECK(std::abs(v - expect) < 1e-11);
  } while (std::next_permutation(idx, idx + 4));
  (void)rng;
}

TEST_CASE("vol3 cocycle") {
  Rng rng(23);
  BoundaryPoint x = BoundaryPoint::from_value(cplx(0.37, 0.21));

  ProjectiveIsometry g = random_isometry(rng);
  CHECK(vol3_cocycle(x, g, g, g, g) == 0.0);

  // against the affine cross-ratio formula
  for (int i = 0; i < 200; ++i) {
    ProjectiveIsometry gs[4];
    for (auto &h : gs)
      h = random_isometry(rng);
    cplx z[4];
    bool inf_hit = false;
    for (int k = 0; k < 4; ++k) {
      BoundaryPoint q = apply_boundary(gs[k], x);
      if (q.is_infinity(1e-8)) {
        inf_hit = true;
        break;
      }
      z[k] = q.value();
    }
    if (inf_hit)
      continue;
    cplx w = ((z[3] - z[1]) * (z[2] - z[0])) / ((z[3] - z[0]) * (z[2] - z[1]));
    CHECK(std::abs(vol3_cocycle(x, gs[0], gs[1], gs[2], gs[3]) -
                   bloch_wigner(w)) < 1e-12);
  }

  // left translation invariance
  for (int i = 0; i < 100; ++i) {
    ProjectiveIsometry h = random_isometry(rng);
    ProjectiveIsometry gs[4];
    for (auto &g2 : gs)
      g2 = random_isometry(rng);
    double v0 = vol3_cocycle(x, gs[0], gs[1], gs[2], gs[3]);
    double v1 = vol3_cocycle(x, h * gs[0], h * gs[1], h * gs[2], h * gs[3]);
    CHECK(std::abs(v0 - v1) < 1e-9);
  }
}

TEST_CASE("vol3 cocycle identity") {
  Rng rng(31);
  BoundaryPoint x = BoundaryPoint::from_value(cplx(0.11, 0.83));
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    ProjectiveIsometry g[5];
    for (auto &h : g)
      h = random_isometry(rng);
    double alt = 0.0;
    for (int omit = 0; omit < 5; ++omit) {
      ProjectiveIsometry f[4];
      int k = 0;
      for (int j = 0; j < 5; ++j)
        if (j != omit)
          f[k++] = g[j];
      double v = vol3_cocycle(x, f[0], f[1], f[2], f[3]);
      alt += (omit % 2 == 0) ? v : -v;
    }
    worst = std::max(worst, std::abs(alt));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("signed area h2") {
  // oracle: hyperbolic law of cosines from the side lengths
  H2Point a{cplx(0.0, 1.0)}, b{cplx(1.0, 1.0)}, c{cplx(0.0, 2.0)};
  double la = dist_h2(b, c), lb = dist_h2(a, c), lc = dist_h2(a, b);
  auto angle = [](double opp, double s1, double s2) {
    return std::acos((std::cosh(s1) * std::cosh(s2) - std::cosh(opp)) /
                     (std::sinh(s1) * std::sinh(s2)));
  };
  double defect = kPi - angle(la, lb, lc) - angle(lb, la, lc) - angle(lc, la, lb);
  CHECK(defect > 0.0);

  H2Vertex v0 = H2Vertex::finite(a.w), v1 = H2Vertex::finite(b.w),
           v2 = H2Vertex::finite(c.w);
  double area = signed_area_h2(v0, v1, v2);
  CHECK(area > 0.0); // (i, i+1, 2i) is positively oriented
  CHECK(std::abs(area - defect) < 1e-12);
  CHECK(std::abs(signed_area_h2(v0, v2, v1) + area) < 1e-15);
  CHECK(signed_area_h2(v0, v0, v1) == 0.0);

  // all ideal
  H2Vertex i0 = H2Vertex::ideal(0.0), i1 = H2Vertex::ideal(1.0),
           iinf = H2Vertex::ideal_infinity();
  CHECK(std::abs(signed_area_h2(i0, i1, iinf) - kPi) < 1e-15);
  CHECK(std::abs(signed_area_h2(i1, i0, iinf) + kPi) < 1e-15);

  // mixed, against the defect formula with one ideal vertex: angle there is 0
  H2Vertex m0 = H2Vertex::ideal(0.0);
  H2Vertex m1 = H2Vertex::finite(cplx(1.0, 1.0));
  H2Vertex m2 = H2Vertex::finite(cplx(-1.0, 0.5));
  double s = signed_area_h2(m0, m1, m2);
  CHECK(std::abs(s) < kPi);
  CHECK(std::abs(s) > 0.0);

  // degenerate: three points on one vertical geodesic
  H2Vertex g0 = H2Vertex::finite(cplx(0.0, 1.0));
  H2Vertex g1 = H2Vertex::finite(cplx(0.0, 2.0));
  H2Vertex g2 = H2Vertex::finite(cplx(0.0, 3.0));
  CHECK(std::abs(signed_area_h2(g0, g1, g2)) < 1e-12);
}

TEST_CASE("area invariance under real isometries") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    double entries[4];
    for (auto &e : entries)
      e = rng.uniform(-2.0, 2.0);
    // positive determinant keeps the normalized matrix real
    if (entries[0] * entries[3] - entries[1] * entries[2] < 0.3)
      continue;
    ProjectiveIsometry g = ProjectiveIsometry::from_entries(
        entries[0], entries[1], entries[2], entries[3]);
    H2Vertex v0 = H2Vertex::finite(cplx(rng.uniform(-2, 2), rng.uniform(0.2, 3)));
    H2Vertex v1 = H2Vertex::finite(cplx(rng.uniform(-2, 2), rng.uniform(0.2, 3)));
    H2Vertex v2 = H2Vertex::finite(cplx(rng.uniform(-2, 2), rng.uniform(0.2, 3)));
    double s0 = signed_area_h2(v0, v1, v2);
    H2Vertex w0 = H2Vertex::finite(apply_h2(g, {v0.w}).w);
    H2Vertex w1 = H2Vertex::finite(apply_h2(g, {v1.w}).w);
    H2Vertex w2 = H2Vertex::finite(apply_h2(g, {v2.w}).w);
    CHECK(std::abs(signed_area_h2(w0, w1, w2) - s0) < 1e-10);
  }
}
