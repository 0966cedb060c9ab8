#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypvol/chains.hpp"
#include "hypvol/isometry.hpp"

namespace hypvol {

struct Mu3Config {
  double mu3 = kMu3;
};

struct Inequality {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0; // checked lhs < rhs
  double margin() const { return rhs - lhs; }
};

// Self-verifying record: two words displacing the basepoint by less than the
// Margulis bound while generating a non-elementary pair.  Irrationality of
// angle parameters can only be declared, never computed, so it rides along
// as an assumption.
struct DensityCertificate {
  H3Point basepoint{cplx(0.0, 0.0), 1.0};
  Word witness_g, witness_h;
  double disp_g = 0.0, disp_h = 0.0;
  double margulis_bound = kMu3;
  ElementaryClass elementarity = ElementaryClass::NonElementary;
  std::vector<Inequality> inequalities;
  std::vector<std::string> assumptions;
};

enum class DenseStatus { Found, NotFound };

struct CertifyDenseResult {
  DenseStatus status = DenseStatus::NotFound;
  std::optional<DensityCertificate> certificate;
  std::string note;
};

struct DensitySearchBudget {
  int max_word_length = 5;        // plain ball enumeration
  long max_conjugate_exponent = 5000; // b^n a b^-n patterns (rank 2 only)
  long max_pairs = 200000;
};

// Closed round disc on CP^1 in the chordal metric.
struct ChordalDisc {
  BoundaryPoint center;
  double radius = 0.0; // chordal, in (0,2)
};

struct SchottkyCertificate {
  // disc pair per generator; generator maps the exterior of repelling[i]
  // into attracting[i]
  std::vector<ChordalDisc> repelling;
  std::vector<ChordalDisc> attracting;
  double margin = 0.0; // min over disjointness and mapping margins (angular)
  std::vector<Inequality> inequalities;
};

enum class SchottkyStatus { Certified, DiscsOverlap, NotLoxodromic };

struct CertifySchottkyResult {
  SchottkyStatus status = SchottkyStatus::DiscsOverlap;
  std::optional<SchottkyCertificate> certificate;
  std::string note;
};

// Loxodromic of complex length r + it along the vertical axis together with
// the elliptic of angle 2*pi*theta about the geodesic (-1, 1); the two axes
// meet orthogonally at (0, 1).
FreeRepresentation rho_theta(double r, double t, double theta);

// x(alpha) = diag(alpha, 1/alpha), y(beta) its conjugate with axis (-1, 1).
FreeRepresentation h_alpha_beta(cplx alpha, cplx beta);

// Largest tau0 < 1/4 with 2 asinh(sin(2 pi tau0) sinh(r+1)) < mu3, strictly.
double threshold_tau0(double r, const Mu3Config &mu = {});

CertifyDenseResult certify_dense(const FreeRepresentation &rep, const H3Point &x,
                                 const Mu3Config &mu = {},
                                 const DensitySearchBudget &budget = {},
                                 std::vector<std::string> assumptions = {});

// Re-checks every certificate inequality from the raw matrices through the
// independent right-to-left evaluation path.
bool verify_density_certificate(const FreeRepresentation &rep,
                                const DensityCertificate &cert);

CertifySchottkyResult certify_schottky(const FreeRepresentation &rep);

bool verify_schottky_certificate(const FreeRepresentation &rep,
                                 const SchottkyCertificate &cert);

// Least n_i >= 1 with n_i theta_i mod 1 in (-tau0, tau0) and
// n_i theta_j mod 1 in (1/8, 3/8) for j != i.  Throws BudgetExceeded.
std::vector<long> find_exponents(const std::vector<double> &thetas, double tau0,
                                 long scan_bound = 10000000);

struct SurfaceRep {
  int genus = 2;
  FreeRepresentation rep;     // rank 2g, real
  Word relator;               // product of commutators [x_i, y_i]
  std::vector<cplx> vertices; // polygon vertices in the upper half-plane
};

// Side pairings of the regular hyperbolic 4g-gon centered at i with vertex
// angle sum 2*pi; generators x_i -> 2i-1, y_i -> 2i.
SurfaceRep fuchsian_surface_rep(int g);

struct DensePsl2r {
  FreeRepresentation rep; // rank 2, real
  ElementaryClass pair_class = ElementaryClass::NonElementary;
  std::vector<std::string> assumptions;
};

// Hyperbolic of translation length l along the imaginary axis and elliptic
// of angle pi*q about i; dense in PSL(2,R) when q is irrational (declared).
DensePsl2r dense_psl2r(double l, double q);

} // namespace hypvol
