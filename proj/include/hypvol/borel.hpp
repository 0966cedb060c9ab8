#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "hypvol/isometry.hpp"

namespace hypvol {

// (j0,j1,j2,j3) with entries in [0, n-2] summing to n-2.
struct MultiIndex {
  int j0, j1, j2, j3;
  int operator[](int i) const { return i == 0 ? j0 : i == 1 ? j1 : i == 2 ? j2 : j3; }
};

// Complete lexicographic enumeration; size n(n-1)(n+1)/6.
std::vector<MultiIndex> multi_index_set(int n);

// Complete flag of C^n held as an orthonormal affine representative
// (f^1, ..., f^n); F^j is the span of the first j columns.  Frame vectors
// are defined up to unit scalars, so flags are compared by subspaces.
class Flag {
public:
  explicit Flag(Eigen::MatrixXcd frame) : frame_(std::move(frame)) {}
  int n() const { return static_cast<int>(frame_.cols()); }
  const Eigen::MatrixXcd &frame() const { return frame_; }

private:
  Eigen::MatrixXcd frame_;
};

// Orthonormalizes an ordered basis (columns); throws DependentBasis when the
// condition number exceeds 1e12.
Flag gram_schmidt_flag(const Eigen::MatrixXcd &basis);

// Largest subspace gap max_j ||(1 - P_j^A) P_j^B||_2; zero iff equal flags.
double flag_distance(const Flag &A, const Flag &B);

struct GenericityReport {
  bool generic = true;
  std::array<int, 4> witness{0, 0, 0, 0}; // first failing (j0,...,j3)
};

GenericityReport is_generic(const Flag &F0, const Flag &F1, const Flag &F2,
                            const Flag &F3, double tol_rank = kTolRank);

// The bounded Borel cocycle B_n on a generic quadruple of flags: for each
// multi-index, project the (j_i+1)-th frame vectors to the orthogonal
// complement of the span of the first j_i's and sum the ideal volumes of the
// resulting CP^1 quadruples.  |B_n| <= n(n^2-1)/6 * v3.
double borel_cocycle(const Flag &F0, const Flag &F1, const Flag &F2,
                     const Flag &F3, double tol_rank = kTolRank);

// Element of PSL(n,C): matrix normalized to det 1, defined up to n-th roots
// of unity.
class ProjectiveIsometryN {
public:
  static ProjectiveIsometryN from_matrix(Eigen::MatrixXcd m);
  int n() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd &matrix() const { return m_; }
  ProjectiveIsometryN operator*(const ProjectiveIsometryN &o) const;

private:
  Eigen::MatrixXcd m_;
};

// Entry distance min over n-th roots of unity.
double projn_distance(const ProjectiveIsometryN &A, const ProjectiveIsometryN &B);

// Irreducible representation PSL(2,C) -> PSL(n,C): the (n-1)-st symmetric
// power in the monomial basis scaled to be unitary on SU(2).
ProjectiveIsometryN veronese_matrix(int n, const ProjectiveIsometry &g);

// Osculating flag of the rational normal curve at z; equivariant with
// respect to veronese_matrix.
Flag veronese_flag(int n, const BoundaryPoint &z);

Flag apply_flag(const ProjectiveIsometryN &h, const Flag &F);

} // namespace hypvol
