#include "hypvol/representations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypvol/volume.hpp"

namespace hypvol {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FreeRepresentation rho_theta(double r, double t, double theta) {
  if (r <= 0.0)
    throw InvalidInput("rho_theta: r must be positive");
  if (t <= 0.0 || t >= kPi / 8.0)
    throw InvalidInput("rho_theta: rotational part must lie in (0, pi/8)");
  if (theta <= 0.0 || theta >= 1.0)
    throw InvalidInput("rho_theta: theta must lie in (0, 1)");

  cplx half = cplx(r, t) / 2.0;
  ProjectiveIsometry a = ProjectiveIsometry::from_entries(
      std::exp(half), 0.0, 0.0, std::exp(-half));
  // elliptic of angle 2*pi*theta with axis endpoints -1, 1; fixes (0,1)
  double ang = kPi * theta;
  ProjectiveIsometry b = ProjectiveIsometry::from_entries(
      std::cos(ang), cplx(0.0, std::sin(ang)), cplx(0.0, std::sin(ang)),
      std::cos(ang));
  return {2, {a, b}, FieldTag::Complex};
}

FreeRepresentation h_alpha_beta(cplx alpha, cplx beta) {
  if (std::abs(std::abs(alpha) - 1.0) < 1e-12 ||
      std::abs(std::abs(beta) - 1.0) < 1e-12)
    throw InvalidInput("h_alpha_beta: unit-modulus parameter");
  ProjectiveIsometry x =
      ProjectiveIsometry::from_entries(alpha, 0.0, 0.0, 1.0 / alpha);
  cplx bp = (beta + 1.0 / beta) / 2.0;
  cplx bm = (beta - 1.0 / beta) / 2.0;
  ProjectiveIsometry y = ProjectiveIsometry::from_entries(bp, bm, bm, bp);
  return {2, {x, y}, FieldTag::Complex};
}

double threshold_tau0(double r, const Mu3Config &mu) {
  if (r <= 0.0)
    throw InvalidInput("threshold_tau0: r must be positive");
  double x = std::sinh(mu.mu3 / 2.0) / std::sinh(r + 1.0);
  double tau = x >= 1.0 ? 0.25 : std::asin(x) / (2.0 * kPi);
  tau = std::min(tau, 0.25);
  return tau * (1.0 - 1e-9); // strict when re-substituted
}

namespace {

double max_entry(const ProjectiveIsometry &g) {
  return std::max(std::max(std::abs(g.a()), std::abs(g.b())),
                  std::max(std::abs(g.c()), std::abs(g.d())));
}

// Reduced words of length <= max_len in BFS order (length, then lex).
void enumerate_ball(int rank, int max_len,
                    const std::vector<ProjectiveIsometry> &gens,
                    const std::vector<ProjectiveIsometry> &invs,
                    std::vector<std::pair<Word, ProjectiveIsometry>> &out) {
  struct Node {
    Word w;
    ProjectiveIsometry m;
  };
  std::vector<Node> level;
  level.push_back({Word(), ProjectiveIsometry::identity()});
  std::vector<int> letters;
  for (int i = 1; i <= rank; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    for (const Node &nd : level) {
      int last = nd.w.empty() ? 0 : nd.w.letters().back();
      for (int l : letters) {
        if (l == -last)
          continue;
        // entries can genuinely explode (Schottky-like generators); such
        // words displace far too much to be witnesses, so prune them
        try {
          Node child;
          child.w = nd.w * Word::generator(l);
          child.m = nd.m * (l > 0 ? gens[l - 1] : invs[-l - 1]);
          if (std::isfinite(child.m.identity_distance()) &&
              max_entry(child.m) < 1e12) {
            out.push_back({child.w, child.m});
            next.push_back(std::move(child));
          }
        } catch (const Error &) {
        }
      }
    }
    level = std::move(next);
  }
}

std::optional<ElementaryClass> try_pair(const ProjectiveIsometry &A,
                                        const ProjectiveIsometry &B) {
  try {
    return is_elementary_pair(A, B);
  } catch (const Error &) {
    return std::nullopt; // ambiguous classification: skip, stay conservative
  }
}

DensityCertificate make_certificate(const H3Point &x, const Word &wg,
                                    const Word &wh, double dg, double dh,
                                    double mu,
                                    std::vector<std::string> assumptions) {
  DensityCertificate cert;
  cert.basepoint = x;
  cert.witness_g = wg;
  cert.witness_h = wh;
  cert.disp_g = dg;
  cert.disp_h = dh;
  cert.margulis_bound = mu;
  cert.elementarity = ElementaryClass::NonElementary;
  cert.inequalities = {
      {"d(x, g.x) < mu3", dg, mu},
      {"d(x, h.x) < mu3", dh, mu},
  };
  cert.assumptions = std::move(assumptions);
  return cert;
}

} // namespace

CertifyDenseResult certify_dense(const FreeRepresentation &rep, const H3Point &x,
                                 const Mu3Config &mu,
                                 const DensitySearchBudget &budget,
                                 std::vector<std::string> assumptions) {
  std::vector<ProjectiveIsometry> invs;
  for (const auto &g : rep.images)
    invs.push_back(g.inverse());

  // stage A: short words displacing x by less than mu
  std::vector<std::pair<Word, ProjectiveIsometry>> ball;
  enumerate_ball(rep.rank, budget.max_word_length, rep.images, invs, ball);
  std::vector<std::pair<Word, ProjectiveIsometry>> small;
  for (auto &[w, m] : ball) {
    if (m.identity_distance() < 1e-9)
      continue;
    if (displacement(m, x) < mu.mu3)
      small.push_back({w, m});
  }
  long pairs = 0;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      if (++pairs > budget.max_pairs)
        goto stage_b;
      auto cls = try_pair(small[i].second, small[j].second);
      if (cls && *cls == ElementaryClass::NonElementary) {
        return {DenseStatus::Found,
                make_certificate(x, small[i].first, small[j].first,
                                 displacement(small[i].second, x),
                                 displacement(small[j].second, x), mu.mu3,
                                 std::move(assumptions)),
                ""};
      }
    }

stage_b:
  // stage B: the proof pattern c = b^n a b^-n with word pair (c^-1 a, c a^-1)
  if (rep.rank == 2) {
    const ProjectiveIsometry &A = rep.images[0];
    const ProjectiveIsometry &B = rep.images[1];
    ProjectiveIsometry Bn; // B^n, grown incrementally
    for (long n = 1; n <= budget.max_conjugate_exponent; ++n) {
      // powers of a loxodromic B blow up and eventually lose their
      // determinant to cancellation; such exponents cannot yield witnesses
      try {
        Bn = Bn * B;
      } catch (const Error &) {
        break;
      }
      if (max_entry(Bn) > 1e12)
        break;
      try {
        ProjectiveIsometry c = Bn * A * Bn.inverse();
        ProjectiveIsometry g = c.inverse() * A;
        ProjectiveIsometry h = c * A.inverse();
        if (g.identity_distance() < 1e-9 || h.identity_distance() < 1e-9)
          continue;
        double dg = displacement(g, x);
        double dh = displacement(h, x);
        if (dg >= mu.mu3 || dh >= mu.mu3)
          continue;
        auto cls = try_pair(g, h);
        if (cls && *cls == ElementaryClass::NonElementary) {
          Word bn = Word::generator(2).pow(static_cast<int>(n));
          Word a = Word::generator(1);
          Word wc = bn * a * bn.inverse();
          return {DenseStatus::Found,
                  make_certificate(x, wc.inverse() * a, wc * a.inverse(), dg,
                                   dh, mu.mu3, std::move(assumptions)),
                  ""};
        }
      } catch (const Error &) {
        // numerically degenerate exponent: skip; certificates are
        // re-verified from the raw matrices anyway
      }
    }
  }
  return {DenseStatus::NotFound, std::nullopt,
          "no qualifying word pair within budget (not a disproof of density)"};
}

bool verify_density_certificate(const FreeRepresentation &rep,
                                const DensityCertificate &cert) {
  ProjectiveIsometry g = word_eval_rtl(rep, cert.witness_g);
  ProjectiveIsometry h = word_eval_rtl(rep, cert.witness_h);
  double dg = displacement(g, cert.basepoint);
  double dh = displacement(h, cert.basepoint);
  if (!(dg < cert.margulis_bound && dh < cert.margulis_bound))
    return false;
  if (std::abs(dg - cert.disp_g) > 1e-9 || std::abs(dh - cert.disp_h) > 1e-9)
    return false;
  auto cls = try_pair(g, h);
  if (!cls || *cls != ElementaryClass::NonElementary)
    return false;
  for (const auto &iq : cert.inequalities)
    if (!(iq.lhs < iq.rhs))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Schottky certification via spherical caps.

namespace {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

Vec3 operator-(const Vec3 &a, const Vec3 &b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
double dot(const Vec3 &a, const Vec3 &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm3(const Vec3 &a) { return std::sqrt(dot(a, a)); }
Vec3 normalize(const Vec3 &a) {
  double n = norm3(a);
  return {a.x / n, a.y / n, a.z / n};
}
Vec3 scale(const Vec3 &a, double s) { return {a.x * s, a.y * s, a.z * s}; }
Vec3 add(const Vec3 &a, const Vec3 &b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Vec3 to_sphere(const BoundaryPoint &p) {
  double n = std::norm(p.z0()) + std::norm(p.z1());
  cplx w = p.z0() * std::conj(p.z1());
  return {2.0 * w.real() / n, 2.0 * w.imag() / n,
          (std::norm(p.z0()) - std::norm(p.z1())) / n};
}

BoundaryPoint from_sphere(const Vec3 &v) {
  if (v.z < 0.0)
    return BoundaryPoint::homogeneous(cplx(v.x, v.y), 1.0 - v.z);
  return BoundaryPoint::homogeneous(1.0 + v.z, cplx(v.x, -v.y));
}

// Closed cap {u in S^2 : <u, n> >= cos(phi)}.
struct Cap {
  Vec3 n;
  double phi = 0.0; // angular radius in (0, pi)
};

double angle_between(const Vec3 &a, const Vec3 &b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

Cap cap_from_disc(const ChordalDisc &d) {
  Cap c;
  c.n = to_sphere(d.center);
  c.phi = 2.0 * std::asin(std::clamp(d.radius / 2.0, 0.0, 1.0));
  return c;
}

ChordalDisc disc_from_cap(const Cap &c) {
  return {from_sphere(c.n), 2.0 * std::sin(c.phi / 2.0)};
}

Cap complement(const Cap &c) { return {scale(c.n, -1.0), kPi - c.phi}; }

// Circle through three sphere points plus an interior point fixes the cap.
Cap cap_through(const Vec3 &p1, const Vec3 &p2, const Vec3 &p3,
                const Vec3 &inside) {
  Vec3 n = cross(p2 - p1, p3 - p1);
  double ln = norm3(n);
  if (ln < 1e-14)
    throw InvalidInput("cap_through: boundary points nearly collinear");
  n = scale(n, 1.0 / ln);
  double h = dot(n, p1);
  if (dot(n, inside) < h) {
    n = scale(n, -1.0);
    h = -h;
  }
  return {n, std::acos(std::clamp(h, -1.0, 1.0))};
}

// Mobius image of a cap, reconstructed from three boundary points and the
// image of the deepest interior point; Mobius maps send round caps to round
// caps, so this is exact up to round-off.
Cap map_cap(const ProjectiveIsometry &g, const Cap &c) {
  Vec3 aux = std::abs(c.n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 e1 = normalize(cross(c.n, aux));
  Vec3 e2 = cross(c.n, e1);
  double cp = std::cos(c.phi), sp = std::sin(c.phi);
  Vec3 img[3];
  for (int k = 0; k < 3; ++k) {
    double t = 2.0 * kPi * k / 3.0;
    Vec3 bd = add(scale(c.n, cp),
                  add(scale(e1, sp * std::cos(t)), scale(e2, sp * std::sin(t))));
    img[k] = to_sphere(apply_boundary(g, from_sphere(normalize(bd))));
  }
  Vec3 inside = to_sphere(apply_boundary(g, from_sphere(c.n)));
  return cap_through(img[0], img[1], img[2], inside);
}

// cap A contained in cap B with angular slack
double containment_margin(const Cap &A, const Cap &B) {
  return B.phi - A.phi - angle_between(A.n, B.n);
}

double disjointness_margin(const Cap &A, const Cap &B) {
  return angle_between(A.n, B.n) - A.phi - B.phi;
}

ProjectiveIsometry su2(double theta, Vec3 axis) {
  axis = normalize(axis);
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return ProjectiveIsometry::from_entries(
      cplx(c, axis.z * s), cplx(axis.y * s, axis.x * s),
      cplx(-axis.y * s, axis.x * s), cplx(c, -axis.z * s));
}

struct CheckedCaps {
  bool ok = false;
  double margin = 0.0;
  std::vector<Inequality> inequalities;
};

CheckedCaps check_caps(const std::vector<ProjectiveIsometry> &gens,
                       const std::vector<Cap> &rep_caps,
                       const std::vector<Cap> &att_caps) {
  CheckedCaps out;
  std::vector<const Cap *> all;
  for (const Cap &c : rep_caps)
    all.push_back(&c);
  for (const Cap &c : att_caps)
    all.push_back(&c);

  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      double m = disjointness_margin(*all[i], *all[j]);
      std::ostringstream label;
      label << "disc " << i << " and disc " << j << " disjoint";
      out.inequalities.push_back({label.str(), all[i]->phi + all[j]->phi,
                                  angle_between(all[i]->n, all[j]->n)});
      margin = std::min(margin, m);
    }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Cap image = map_cap(gens[i], complement(rep_caps[i]));
    double m = containment_margin(image, att_caps[i]);
    std::ostringstream label;
    label << "generator " << i << " maps exterior of its repelling disc into "
          << "its attracting disc";
    out.inequalities.push_back(
        {label.str(), image.phi + angle_between(image.n, att_caps[i].n),
         att_caps[i].phi});
    margin = std::min(margin, m);
  }
  out.margin = margin;
  out.ok = margin > 0.0;
  return out;
}

} // namespace

CertifySchottkyResult certify_schottky(const FreeRepresentation &rep) {
  for (const auto &g : rep.images) {
    try {
      if (classify(g).type != IsometryType::Loxodromic)
        return {SchottkyStatus::NotLoxodromic, std::nullopt,
                "generator is not loxodromic"};
    } catch (const AmbiguousClass &) {
      return {SchottkyStatus::NotLoxodromic, std::nullopt,
              "generator classification ambiguous"};
    }
  }

  // Isometric circles need |c| away from 0; conjugate by a fixed rotation
  // when a generator fixes infinity.
  const std::vector<std::pair<double, Vec3>> rotations = {
      {0.0, {0, 0, 1}},       {1.1, {1, 2, 3}},  {2.0, {-1, 1, 2}},
      {0.7, {1, 0, 0}},       {1.9, {0, 1, 0}},  {1.3, {2, -3, 1}},
      {2.6, {1, 1, -1}},      {0.5, {-3, 1, 4}},
  };
  std::vector<ProjectiveIsometry> conj;
  bool found = false;
  ProjectiveIsometry u;
  for (const auto &[ang, axis] : rotations) {
    u = su2(ang, axis);
    ProjectiveIsometry uinv = u.inverse();
    conj.clear();
    bool good = true;
    for (const auto &g : rep.images) {
      ProjectiveIsometry h = u * g * uinv;
      if (std::abs(h.c()) < 1e-3 * max_entry(h)) {
        good = false;
        break;
      }
      conj.push_back(h);
    }
    if (good) {
      found = true;
      break;
    }
  }
  if (!found)
    return {SchottkyStatus::DiscsOverlap, std::nullopt,
            "no chart separates the isometric circles from infinity"};

  // candidate discs: isometric circles inflated by 1% so that both the
  // disjointness and the mapping checks carry positive margin
  constexpr double kInflate = 1.01;
  std::vector<Cap> rep_caps, att_caps;
  for (const auto &h : conj) {
    cplx c = h.c(), d = h.d(), a = h.a();
    double radius = kInflate / std::abs(c);
    auto euclid_cap = [&](cplx center) {
      Vec3 p1 = to_sphere(BoundaryPoint::from_value(center + radius));
      Vec3 p2 = to_sphere(BoundaryPoint::from_value(center + cplx(0, radius)));
      Vec3 p3 = to_sphere(BoundaryPoint::from_value(center - radius));
      Vec3 inside = to_sphere(BoundaryPoint::from_value(center));
      return cap_through(p1, p2, p3, inside);
    };
    rep_caps.push_back(euclid_cap(-d / c));
    att_caps.push_back(euclid_cap(a / c));
  }

  // transport back to the original chart and verify against the original
  // generators; Mobius images of round discs are round discs
  ProjectiveIsometry uinv = u.inverse();
  for (auto &c : rep_caps)
    c = map_cap(uinv, c);
  for (auto &c : att_caps)
    c = map_cap(uinv, c);

  CheckedCaps chk = check_caps(rep.images, rep_caps, att_caps);
  if (!chk.ok)
    return {SchottkyStatus::DiscsOverlap, std::nullopt,
            "candidate discs overlap or fail the mapping check "
            "(inconclusive, not a disproof)"};

  SchottkyCertificate cert;
  for (std::size_t i = 0; i < rep_caps.size(); ++i) {
    cert.repelling.push_back(disc_from_cap(rep_caps[i]));
    cert.attracting.push_back(disc_from_cap(att_caps[i]));
  }
  cert.margin = chk.margin;
  cert.inequalities = std::move(chk.inequalities);
  return {SchottkyStatus::Certified, cert, ""};
}

bool verify_schottky_certificate(const FreeRepresentation &rep,
                                 const SchottkyCertificate &cert) {
  if (cert.repelling.size() != rep.images.size() ||
      cert.attracting.size() != rep.images.size())
    return false;
  std::vector<Cap> rep_caps, att_caps;
  for (std::size_t i = 0; i < rep.images.size(); ++i) {
    rep_caps.push_back(cap_from_disc(cert.repelling[i]));
    att_caps.push_back(cap_from_disc(cert.attracting[i]));
  }
  CheckedCaps chk = check_caps(rep.images, rep_caps, att_caps);
  return chk.ok && chk.margin > 0.0;
}

std::vector<long> find_exponents(const std::vector<double> &thetas, double tau0,
                                 long scan_bound) {
  auto frac = [](double x) { return x - std::floor(x); };
  auto in_dense = [&](double f) { return f < tau0 || f > 1.0 - tau0; };
  auto in_schottky = [](double f) { return f > 0.125 && f < 0.375; };

  std::vector<long> out;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    long found = -1;
    for (long n = 1; n <= scan_bound; ++n) {
      if (!in_dense(frac(double(n) * thetas[i])))
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        if (j == i)
          continue;
        if (!in_schottky(frac(double(n) * thetas[j]))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = n;
        break;
      }
    }
    if (found < 0)
      throw BudgetExceeded("find_exponents: no exponent below scan bound");
    out.push_back(found);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fuchsian surface groups from the regular 4g-gon.

namespace {

// The construction compounds a few dozen matrix products whose conditioning
// grows with the genus, so it runs in extended precision end to end and only
// the finished generators are rounded to doubles.
using ldbl = long double;
using lcplx = std::complex<ldbl>;

struct M2 {
  lcplx a, b, c, d;

  M2 operator*(const M2 &o) const {
    return normalized({a * o.a + b * o.c, a * o.b + b * o.d,
                       c * o.a + d * o.c, c * o.b + d * o.d});
  }
  M2 inverse() const { return normalized({d, -b, -c, a}); }

  static M2 normalized(M2 m) {
    lcplx det = m.a * m.d - m.b * m.c;
    lcplx s = std::sqrt(det);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
  }
};

constexpr ldbl kPiL = 3.14159265358979323846264338327950288L;

// Unique element of PSL(2,R) sending p to i with q straight up the axis.
// The rotation angle about i comes from the disk coordinate of the image of
// q: rotating by psi about i multiplies (w - i)/(w + i) by e^{i psi}, and
// the ray above i is the positive real axis of the disk.
M2 h2_frame(lcplx p, lcplx q) {
  M2 A = M2::normalized({1.0L, -p.real(), 0.0L, p.imag()});
  lcplx w = (q - p.real()) / p.imag();
  ldbl psi = -std::arg((w - lcplx(0, 1)) / (w + lcplx(0, 1)));
  M2 R{std::cos(psi / 2), std::sin(psi / 2), -std::sin(psi / 2),
       std::cos(psi / 2)};
  return R * A;
}

} // namespace

SurfaceRep fuchsian_surface_rep(int g) {
  if (g < 2)
    throw InvalidInput("fuchsian_surface_rep: genus must be >= 2");
  int N = 4 * g;

  // regular N-gon with vertex angle sum 2*pi; the right triangle with
  // angles pi/N (center), pi/N (half vertex angle), pi/2 gives
  // cosh R = cot(pi/N) cot(pi/N) for the circumradius
  ldbl cot = 1.0L / std::tan(kPiL / N);
  ldbl R = std::acosh(cot * cot);
  ldbl rho = std::tanh(R / 2); // disk-model radius
  std::vector<lcplx> v(N);
  for (int k = 0; k < N; ++k) {
    lcplx w = rho * std::exp(lcplx(0.0L, 2 * kPiL * k / N));
    v[k] = lcplx(0, 1) * (1.0L - w) / (1.0L + w); // Cayley, center -> i
  }
  auto vert = [&](int k) { return v[((k % N) + N) % N]; };

  // edge pairing for the u-edge pair (+u at position k, -u at position j):
  // T maps (v_k, v_{k+1}) to (v_{j+1}, v_j)
  auto pairing = [&](int k, int j) {
    return h2_frame(vert(j + 1), vert(j)).inverse() *
           h2_frame(vert(k), vert(k + 1));
  };

  std::vector<ProjectiveIsometry> gens(2 * g);
  M2 C{1, 0, 0, 1}; // product of finished commutators
  for (int i = 0; i < g; ++i) {
    M2 Tx = pairing(4 * i, 4 * i + 2);
    M2 Ty = pairing(4 * i + 1, 4 * i + 3);
    // with A = C^-1 Tx C = X Y X^-1 and B = C^-1 Ty C = X Y X^-1 Y^-1 X^-1,
    // solving gives X = A^-1 B^-1 A and Y = A^-1 B A B^-1 A; conjugating
    // once at the end keeps the intermediate products tame
    M2 Txi = Tx.inverse(), Tyi = Ty.inverse(), Ci = C.inverse();
    M2 X = Ci * (Txi * Tyi * Tx) * C;
    M2 Y = Ci * (Txi * Ty * Tx * Tyi * Tx) * C;
    gens[2 * i] = ProjectiveIsometry::from_entries(
        cplx(double(X.a.real()), double(X.a.imag())),
        cplx(double(X.b.real()), double(X.b.imag())),
        cplx(double(X.c.real()), double(X.c.imag())),
        cplx(double(X.d.real()), double(X.d.imag())));
    gens[2 * i + 1] = ProjectiveIsometry::from_entries(
        cplx(double(Y.a.real()), double(Y.a.imag())),
        cplx(double(Y.b.real()), double(Y.b.imag())),
        cplx(double(Y.c.real()), double(Y.c.imag())),
        cplx(double(Y.d.real()), double(Y.d.imag())));
    C = C * (X * Y * X.inverse() * Y.inverse());
  }

  Word relator;
  for (int i = 0; i < g; ++i) {
    Word x = Word::generator(2 * i + 1);
    Word y = Word::generator(2 * i + 2);
    relator = relator * x * y * x.inverse() * y.inverse();
  }

  SurfaceRep out;
  out.genus = g;
  out.rep = {2 * g, std::move(gens), FieldTag::Real};
  out.relator = relator;
  out.vertices.reserve(N);
  for (const lcplx &w : v)
    out.vertices.push_back({double(w.real()), double(w.imag())});
  return out;
}

DensePsl2r dense_psl2r(double l, double q) {
  if (l <= 0.0)
    throw InvalidInput("dense_psl2r: translation length must be positive");
  ProjectiveIsometry a = ProjectiveIsometry::from_entries(
      std::exp(l / 2.0), 0.0, 0.0, std::exp(-l / 2.0));
  double half = kPi * q / 2.0; // rotation about i by pi*q
  ProjectiveIsometry b = ProjectiveIsometry::from_entries(
      std::cos(half), std::sin(half), -std::sin(half), std::cos(half));

  DensePsl2r out;
  out.rep = {2, {a, b}, FieldTag::Real};
  out.pair_class = is_elementary_pair_h2(a, b);
  std::ostringstream s;
  s << "q = " << q << " declared irrational; the closure then contains the "
    << "full rotation group about i";
  out.assumptions = {s.str()};
  return out;
}

} // namespace hypvol
