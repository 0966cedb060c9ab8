#include "hypvol/borel.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "hypvol/volume.hpp"

namespace hypvol {

std::vector<MultiIndex> multi_index_set(int n) {
  if (n < 2)
    throw InvalidInput("multi_index_set: n must be >= 2");
  std::vector<MultiIndex> out;
  int s = n - 2;
  for (int j0 = s; j0 >= 0; --j0)
    for (int j1 = s - j0; j1 >= 0; --j1)
      for (int j2 = s - j0 - j1; j2 >= 0; --j2)
        out.push_back({j0, j1, j2, s - j0 - j1 - j2});
  return out;
}

Flag gram_schmidt_flag(const Eigen::MatrixXcd &basis) {
  const auto n = basis.rows();
  if (basis.cols() != n || n < 1)
    throw InvalidInput("gram_schmidt_flag: need n independent vectors in C^n");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(basis);
  const auto &sv = svd.singularValues();
  if (sv(n - 1) < 1e-12 * sv(0))
    throw DependentBasis("gram_schmidt_flag: basis numerically dependent");

  Eigen::MatrixXcd q = basis;
  for (Eigen::Index j = 0; j < n; ++j) {
    // two orthogonalization passes for stability
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < j; ++i)
        q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    q.col(j) /= q.col(j).norm();
  }
  return Flag(q);
}

double flag_distance(const Flag &A, const Flag &B) {
  if (A.n() != B.n())
    throw InvalidInput("flag_distance: dimension mismatch");
  double worst = 0.0;
  for (int j = 1; j < A.n(); ++j) {
    auto qa = A.frame().leftCols(j);
    auto qb = B.frame().leftCols(j);
    Eigen::MatrixXcd resid = qb - qa * (qa.adjoint() * qb);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(resid);
    worst = std::max(worst, svd.singularValues()(0));
  }
  return worst;
}

namespace {

int numerical_rank(const Eigen::MatrixXcd &m, double tol) {
  if (m.cols() == 0)
    return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol)
      ++r;
  return r;
}

Eigen::MatrixXcd stack_prefixes(const Flag *flags[4], const int js[4]) {
  int n = flags[0]->n();
  int total = js[0] + js[1] + js[2] + js[3];
  Eigen::MatrixXcd m(n, total);
  int col = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < js[i]; ++j)
      m.col(col++) = flags[i]->frame().col(j);
  return m;
}

} // namespace

GenericityReport is_generic(const Flag &F0, const Flag &F1, const Flag &F2,
                            const Flag &F3, double tol_rank) {
  const Flag *flags[4] = {&F0, &F1, &F2, &F3};
  int n = F0.n();
  for (int i = 1; i < 4; ++i)
    if (flags[i]->n() != n)
      throw InvalidInput("is_generic: flags live in different C^n");

  GenericityReport rep;
  int js[4];
  for (js[0] = 0; js[0] <= n - 1; ++js[0])
    for (js[1] = 0; js[1] <= n - 1; ++js[1])
      for (js[2] = 0; js[2] <= n - 1; ++js[2])
        for (js[3] = 0; js[3] <= n - 1; ++js[3]) {
          int k = js[0] + js[1] + js[2] + js[3];
          if (k == 0)
            continue;
          int expected = std::min(n, k);
          if (numerical_rank(stack_prefixes(flags, js), tol_rank) != expected) {
            rep.generic = false;
            rep.witness = {js[0], js[1], js[2], js[3]};
            return rep;
          }
        }
  return rep;
}

double borel_cocycle(const Flag &F0, const Flag &F1, const Flag &F2,
                     const Flag &F3, double tol_rank) {
  const Flag *flags[4] = {&F0, &F1, &F2, &F3};
  int n = F0.n();

  GenericityReport g = is_generic(F0, F1, F2, F3, tol_rank);
  if (!g.generic)
    throw NonGenericConfiguration("borel_cocycle: configuration not generic");

  double total = 0.0;
  for (const MultiIndex &J : multi_index_set(n)) {
    int js[4] = {J.j0, J.j1, J.j2, J.j3};
    Eigen::MatrixXcd span = stack_prefixes(flags, js);

    // orthonormal basis of the 2-dimensional complement
    Eigen::MatrixXcd comp;
    if (span.cols() == 0) {
      comp = Eigen::MatrixXcd::Identity(n, 2);
    } else {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(span, Eigen::ComputeFullU);
      if (svd.singularValues()(span.cols() - 1) <= tol_rank)
        throw NonGenericConfiguration("borel_cocycle: degenerate span");
      comp = svd.matrixU().rightCols(2);
    }

    BoundaryPoint pts[4];
    for (int i = 0; i < 4; ++i) {
      Eigen::Vector2cd w = comp.adjoint() * flags[i]->frame().col(js[i]);
      if (w.norm() <= tol_rank)
        throw NonGenericConfiguration("borel_cocycle: zero projection");
      pts[i] = BoundaryPoint::homogeneous(w(0), w(1));
    }
    total += ideal_tet_volume(pts[0], pts[1], pts[2], pts[3]);
  }
  return total;
}

ProjectiveIsometryN ProjectiveIsometryN::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw InvalidInput("ProjectiveIsometryN: need a square matrix, n >= 2");
  cplx det = m.determinant();
  if (std::abs(det) < 1e-30)
    throw InvalidInput("ProjectiveIsometryN: singular matrix");
  cplx root = std::exp(std::log(det) / double(m.rows()));
  ProjectiveIsometryN out;
  out.m_ = m / root;
  return out;
}

ProjectiveIsometryN ProjectiveIsometryN::operator*(const ProjectiveIsometryN &o) const {
  return from_matrix(m_ * o.m_);
}

double projn_distance(const ProjectiveIsometryN &A, const ProjectiveIsometryN &B) {
  int n = A.n();
  double best = std::numeric_limits<double>::infinity();
  constexpr double kPi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    cplx w = std::exp(cplx(0.0, 2.0 * kPi * k / n));
    best = std::min(best, (A.matrix() - w * B.matrix()).cwiseAbs().maxCoeff());
  }
  return best;
}

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i)
    r = r * double(n - i) / double(i + 1);
  return r;
}

cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i)
    r *= z;
  return r;
}

// Coefficients of (uX + vY)^m in the monomial basis X^{m-r} Y^r.
std::vector<cplx> binomial_coeffs(cplx u, cplx v, int m) {
  std::vector<cplx> out(m + 1);
  for (int r = 0; r <= m; ++r)
    out[r] = binom(m, r) * ipow(u, m - r) * ipow(v, r);
  return out;
}

} // namespace

ProjectiveIsometryN veronese_matrix(int n, const ProjectiveIsometry &g) {
  if (n < 2)
    throw InvalidInput("veronese_matrix: n must be >= 2");
  int m = n - 1;
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  // monomial X^{m-j} Y^j maps to (aX + cY)^{m-j} (bX + dY)^j
  for (int j = 0; j < n; ++j) {
    auto p = binomial_coeffs(g.a(), g.c(), m - j);
    auto q = binomial_coeffs(g.b(), g.d(), j);
    for (int r = 0; r < static_cast<int>(p.size()); ++r)
      for (int s = 0; s < static_cast<int>(q.size()); ++s)
        A(r + s, j) += p[r] * q[s];
  }
  // rescale to the unitary monomial basis b_j = sqrt(C(m,j)) X^{m-j} Y^j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) *= std::sqrt(binom(m, j)) / std::sqrt(binom(m, i));
  return ProjectiveIsometryN::from_matrix(A);
}

Flag veronese_flag(int n, const BoundaryPoint &z) {
  if (n < 2)
    throw InvalidInput("veronese_flag: n must be >= 2");
  int m = n - 1;
  cplx p0 = z.z0(), p1 = z.z1();
  // any direction transverse to (p0,p1); the flag does not depend on it
  cplx q0 = -std::conj(p1), q1 = std::conj(p0);

  // nu(p + t q) componentwise is a polynomial in t; column i of the jet
  // matrix holds the t^i coefficients.
  Eigen::MatrixXcd jets = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    auto f = binomial_coeffs(p0, q0, m - k); // in t: (p0 + t q0)^{m-k}
    auto h = binomial_coeffs(p1, q1, k);
    // f[r] multiplies p0^{m-k-r} q0^r, i.e. t^r
    double scale = std::sqrt(binom(m, k));
    for (int r = 0; r < static_cast<int>(f.size()); ++r)
      for (int s = 0; s < static_cast<int>(h.size()); ++s)
        jets(k, r + s) += scale * f[r] * h[s];
  }
  return gram_schmidt_flag(jets);
}

Flag apply_flag(const ProjectiveIsometryN &h, const Flag &F) {
  return gram_schmidt_flag(h.matrix() * F.frame());
}

} // namespace hypvol
