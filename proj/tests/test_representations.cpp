#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "hypvol/representations.hpp"
#include "hypvol/volume.hpp"

using namespace hypvol;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("rho_theta") {
  double r = 1.0, t = kPi / 16.0, theta = std::sqrt(2.0) - 1.0;
  FreeRepresentation rep = rho_theta(r, t, theta);

  IsometryClass c1 = classify(rep.images[0]);
  CHECK(c1.type == IsometryType::Loxodromic);
  CHECK(std::abs(c1.translation_length - cplx(r, t)) < 1e-12);

  IsometryClass c2 = classify(rep.images[1]);
  CHECK(c2.type == IsometryType::Elliptic);
  double want = 2.0 * kPi * theta;
  if (want > kPi)
    want = 2.0 * kPi - want;
  CHECK(std::abs(c2.rotation_angle - want) < 1e-12);

  // axes: (0, infinity) and (-1, 1), meeting orthogonally at (0,1).
  // Orthogonal intersecting geodesics have harmonic endpoint cross ratio:
  // with this convention cr(0, -1, infinity, 1) = 2.
  BoundaryPoint w = cross_ratio(
      BoundaryPoint::from_value(0.0), BoundaryPoint::from_value(-1.0),
      BoundaryPoint::infinity(), BoundaryPoint::from_value(1.0));
  CHECK(chordal(w, BoundaryPoint::from_value(2.0)) < 1e-12);
  FixedPointSet f2 = fixed_points(rep.images[1]);
  REQUIRE(f2.points.size() == 2);
  bool hits_pm1 =
      (chordal(f2.points[0], BoundaryPoint::from_value(1.0)) < 1e-9 &&
       chordal(f2.points[1], BoundaryPoint::from_value(-1.0)) < 1e-9) ||
      (chordal(f2.points[0], BoundaryPoint::from_value(-1.0)) < 1e-9 &&
       chordal(f2.points[1], BoundaryPoint::from_value(1.0)) < 1e-9);
  CHECK(hits_pm1);
  H3Point mid{cplx(0.0, 0.0), 1.0};
  CHECK(displacement(rep.images[1], mid) < 1e-12); // fixes (0,1)

  // powers rotate by 2 pi k theta
  ProjectiveIsometry b3 =
      rep.images[1] * rep.images[1] * rep.images[1];
  double a3 = std::fmod(3.0 * 2.0 * kPi * theta, 2.0 * kPi);
  if (a3 > kPi)
    a3 = 2.0 * kPi - a3;
  CHECK(std::abs(classify(b3).rotation_angle - a3) < 1e-11);

  CHECK_THROWS_AS(rho_theta(-1.0, t, theta), InvalidInput);
  CHECK_THROWS_AS(rho_theta(1.0, kPi / 4.0, theta), InvalidInput);
}

TEST_CASE("h_alpha_beta") {
  cplx alpha(2.0, 0.5), beta(0.3, -0.2);
  FreeRepresentation rep = h_alpha_beta(alpha, beta);

  FixedPointSet fx = fixed_points(rep.images[0]);
  REQUIRE(fx.points.size() == 2);
  CHECK((fx.points[0].is_infinity() || fx.points[1].is_infinity()));

  // y(beta) fixes -1 and +1 (from the fixed-point quadratic)
  FixedPointSet fy = fixed_points(rep.images[1]);
  REQUIRE(fy.points.size() == 2);
  bool pm1 = (chordal(fy.points[0], BoundaryPoint::from_value(1.0)) < 1e-9 &&
              chordal(fy.points[1], BoundaryPoint::from_value(-1.0)) < 1e-9) ||
             (chordal(fy.points[0], BoundaryPoint::from_value(-1.0)) < 1e-9 &&
              chordal(fy.points[1], BoundaryPoint::from_value(1.0)) < 1e-9);
  CHECK(pm1);

  // the two axes meet orthogonally: harmonic endpoint configuration, and the
  // common point (0,1) realizes both translation lengths exactly
  H3Point mid{cplx(0.0, 0.0), 1.0};
  IsometryClass cy = classify(rep.images[1]);
  CHECK(std::abs(displacement(rep.images[1], mid) -
                 cy.translation_length.real()) < 1e-12);
  BoundaryPoint wq = cross_ratio(
      fixed_points(rep.images[0]).points[0], fy.points[0],
      fixed_points(rep.images[0]).points[1], fy.points[1]);
  CHECK(std::abs(wq.value().imag()) < 1e-9); // intersecting axes
  CHECK((chordal(wq, BoundaryPoint::from_value(2.0)) < 1e-9 ||
         chordal(wq, BoundaryPoint::from_value(0.5)) < 1e-9)); // orthogonal

  // tau(x(alpha)) = 2 log alpha mod 2 pi i
  IsometryClass cx = classify(rep.images[0]);
  cplx tau = 2.0 * std::log(alpha);
  double theta = tau.imag();
  theta -= 2.0 * kPi * std::floor((theta + kPi) / (2.0 * kPi));
  cplx expect(std::abs(tau.real()), tau.real() >= 0 ? theta : -theta);
  CHECK(std::abs(cx.translation_length - expect) < 1e-12);

  CHECK_THROWS_AS(h_alpha_beta(std::exp(cplx(0.0, 0.3)), beta), InvalidInput);
}

TEST_CASE("threshold_tau0") {
  Mu3Config mu;
  double tau = threshold_tau0(1.0, mu);
  CHECK(std::abs(tau - 0.002283) < 1e-6);

  // re-substituted defining inequality holds strictly
  CHECK(2.0 * std::asinh(std::sin(2.0 * kPi * tau) * std::sinh(2.0)) < mu.mu3);

  // monotone decreasing in r
  double prev = threshold_tau0(0.5, mu);
  for (double r : {1.0, 2.0, 5.0, 10.0}) {
    double cur = threshold_tau0(r, mu);
    CHECK(cur < prev);
    CHECK(cur > 0.0);
    CHECK(2.0 * std::asinh(std::sin(2.0 * kPi * cur) * std::sinh(r + 1.0)) <
          mu.mu3);
    prev = cur;
  }
}

TEST_CASE("find_exponents") {
  double t1 = std::sqrt(2.0) - 1.0, t2 = std::sqrt(3.0) - 1.0;

  // brute-force scan oracle for the single-theta case
  double tau0 = 0.01;
  long expect = -1;
  for (long n = 1; n < 1000000; ++n) {
    double f = n * t1 - std::floor(n * t1);
    if (f < tau0 || f > 1.0 - tau0) {
      expect = n;
      break;
    }
  }
  auto single = find_exponents({t1}, tau0);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == expect);

  auto both = find_exponents({t1, t2}, tau0);
  REQUIRE(both.size() == 2);
  auto frac = [](double x) { return x - std::floor(x); };
  for (int i = 0; i < 2; ++i) {
    double ti = i == 0 ? t1 : t2;
    double tj = i == 0 ? t2 : t1;
    double fi = frac(both[i] * ti);
    double fj = frac(both[i] * tj);
    CHECK((fi < tau0 || fi > 1.0 - tau0));
    CHECK(fj > 0.125);
    CHECK(fj < 0.375);
    // minimality: no smaller n satisfies both windows
    for (long n = 1; n < both[i]; ++n) {
      double gi = frac(n * ti), gj = frac(n * tj);
      bool ok = (gi < tau0 || gi > 1.0 - tau0) && gj > 0.125 && gj < 0.375;
      CHECK_FALSE(ok);
    }
  }

  CHECK_THROWS_AS(find_exponents({t1}, 1e-9, 1000), BudgetExceeded);
}

TEST_CASE("fuchsian surface representation") {
  for (int g : {2, 3}) {
    SurfaceRep s = fuchsian_surface_rep(g);
    CHECK(s.rep.rank == 2 * g);
    CHECK(s.rep.field == FieldTag::Real);

    for (const auto &gen : s.rep.images) {
      CHECK(gen.is_real(1e-10));
      IsometryClass c = classify(gen);
      CHECK(c.type == IsometryType::Loxodromic);
      CHECK(std::abs(c.translation_length.imag()) < 1e-9);
    }

    // the defining relation holds
    ProjectiveIsometry rel = word_eval(s.rep, s.relator);
    CHECK(rel.identity_distance() < 1e-9);

    // polygon area by angle defect: fan from vertex 0, pure geometry
    double area = 0.0;
    int N = 4 * g;
    for (int k = 1; k + 1 < N; ++k)
      area += signed_area_h2(H2Vertex::finite(s.vertices[0]),
                             H2Vertex::finite(s.vertices[k]),
                             H2Vertex::finite(s.vertices[k + 1]));
    CHECK(std::abs(std::abs(area) - 4.0 * kPi * (g - 1)) < 1e-9);

    // vertices are the prefix orbit of the base vertex
    Word prefix;
    bool vertex_orbit = true;
    for (int k = 0; k < N; ++k) {
      H2Point img = apply_h2(word_eval(s.rep, prefix), {s.vertices[0]});
      if (std::abs(img.w - s.vertices[k]) > 1e-9)
        vertex_orbit = false;
      int letter = 0;
      int pos = k % 4, handle = k / 4;
      switch (pos) {
      case 0: letter = 2 * handle + 1; break;
      case 1: letter = 2 * handle + 2; break;
      case 2: letter = -(2 * handle + 1); break;
      case 3: letter = -(2 * handle + 2); break;
      }
      prefix = prefix * Word::generator(letter);
    }
    CHECK(vertex_orbit);
  }
}

TEST_CASE("dense_psl2r") {
  DensePsl2r d = dense_psl2r(1.0, std::sqrt(2.0));
  CHECK(d.pair_class == ElementaryClass::NonElementary);
  CHECK(d.rep.field == FieldTag::Real);

  IsometryClass c1 = classify(d.rep.images[0]);
  CHECK(c1.type == IsometryType::Loxodromic);
  CHECK(std::abs(c1.translation_length - cplx(1.0, 0.0)) < 1e-12);

  IsometryClass c2 = classify(d.rep.images[1]);
  CHECK(c2.type == IsometryType::Elliptic);
  CHECK_FALSE(d.assumptions.empty());
}

TEST_CASE("certify_dense on explicit families") {
  H3Point base{cplx(0.0, 0.0), 1.0};
  Mu3Config mu;

  // small non-real screws about orthogonal axes: single letters suffice
  cplx ea = std::exp(0.05 * std::exp(cplx(0.0, kPi / 5.0)));
  cplx eb = std::exp(cplx(0.05, 0.0));
  FreeRepresentation hd = h_alpha_beta(ea, eb);
  CertifyDenseResult res = certify_dense(hd, base, mu);
  REQUIRE(res.status == DenseStatus::Found);
  CHECK(verify_density_certificate(hd, *res.certificate));
  CHECK(res.certificate->disp_g < mu.mu3);
  CHECK(res.certificate->disp_h < mu.mu3);

  // rho_theta needs the conjugate-power pattern b^n a b^-n
  FreeRepresentation rt = rho_theta(1.0, kPi / 16.0, std::sqrt(2.0) - 1.0);
  DensitySearchBudget budget;
  budget.max_word_length = 3;
  CertifyDenseResult res2 = certify_dense(rt, base, mu, budget,
                                          {"theta = sqrt(2)-1 irrational"});
  REQUIRE(res2.status == DenseStatus::Found);
  CHECK(verify_density_certificate(rt, *res2.certificate));
  CHECK_FALSE(res2.certificate->assumptions.empty());

  // Fuchsian representations preserve a plane: no certificate
  SurfaceRep srep = fuchsian_surface_rep(2);
  CertifyDenseResult res3 = certify_dense(srep.rep, base, mu);
  CHECK(res3.status == DenseStatus::NotFound);
}

TEST_CASE("certify_schottky") {
  // widely separated parameters: ping-pong discs with positive margin
  FreeRepresentation s = h_alpha_beta(101.0, 101.0);
  CertifySchottkyResult res = certify_schottky(s);
  REQUIRE(res.status == SchottkyStatus::Certified);
  CHECK(res.certificate->margin > 0.0);
  CHECK(verify_schottky_certificate(s, *res.certificate));

  // tiny translation lengths: isometric discs blow up and overlap
  cplx ea = std::exp(0.05 * std::exp(cplx(0.0, kPi / 5.0)));
  FreeRepresentation tiny = h_alpha_beta(ea, std::exp(cplx(0.05, 0.0)));
  CHECK(certify_schottky(tiny).status == SchottkyStatus::DiscsOverlap);

  // elliptic generator is rejected
  FreeRepresentation rt = rho_theta(1.0, kPi / 16.0, 0.3);
  CHECK(certify_schottky(rt).status == SchottkyStatus::NotLoxodromic);

  // rho_theta conjugate pair beyond the Schottky threshold
  double r = 26.0, t = kPi / 16.0, theta = std::sqrt(2.0) - 1.0;
  CHECK(r > (1.0 + std::cos(kPi / 8.0)) / (1.0 - std::cos(kPi / 8.0)));
  FreeRepresentation rep = rho_theta(r, t, theta);
  // exponent with n*theta in (1/8, 3/8) mod 1
  long n = -1;
  for (long k = 1; k < 10000; ++k) {
    double f = k * theta - std::floor(k * theta);
    if (f > 0.125 && f < 0.375) {
      n = k;
      break;
    }
  }
  REQUIRE(n > 0);
  ProjectiveIsometry bn = word_eval(rep, Word::generator(2).pow(int(n)));
  FreeRepresentation pair;
  pair.rank = 2;
  pair.images = {rep.images[0], bn * rep.images[0] * bn.inverse()};
  CertifySchottkyResult res2 = certify_schottky(pair);
  REQUIRE(res2.status == SchottkyStatus::Certified);
  CHECK(res2.certificate->margin > 0.0);
  CHECK(verify_schottky_certificate(pair, *res2.certificate));
}

TEST_CASE("schottky certificate is disturbed by overlap") {
  FreeRepresentation s = h_alpha_beta(101.0, 101.0);
  CertifySchottkyResult res = certify_schottky(s);
  REQUIRE(res.status == SchottkyStatus::Certified);
  SchottkyCertificate bad = *res.certificate;
  bad.repelling[0].radius = 1.9; // blow the disc up
  CHECK_FALSE(verify_schottky_certificate(s, bad));
}
