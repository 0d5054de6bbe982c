#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homspace/linalg.hpp"

namespace homspace {

// A real matrix Lie algebra with a fixed ordered basis.
//
// Coordinates are always taken with respect to basis(); ad(i) is the matrix
// of ad(Z_i) in those coordinates, so column j of ad(i) holds the
// coefficients of [Z_i, Z_j] and structure(i, j, k) = ad(i)(k, j).
class LieAlgebra {
 public:
  LieAlgebra() = default;

  // Computes structure constants and the Killing form from matrices.
  // Throws InvalidArgument on dependent or non-square input and
  // InvariantViolation if the span is not bracket-closed.
  static LieAlgebra from_basis(std::string name, std::vector<Mat> basis, double tol = kDefaultTol);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return ambient_; }
  const std::vector<Mat>& basis() const { return basis_; }

  const Mat& ad(int i) const { return ad_[i]; }
  double structure(int i, int j, int k) const { return ad_[i](k, j); }
  // K(X, Y) = tr(ad X ad Y) in basis coordinates.
  const Mat& killing() const { return killing_; }

  Mat ad_of(const Vec& x) const;
  Mat to_matrix(const Vec& x) const;
  // Least-squares coordinates of an ambient matrix.
  Vec coordinates(const Mat& m) const;
  // Distance from m to span(basis) (Frobenius).
  double membership_residual(const Mat& m) const;

 private:
  std::string name_;
  int ambient_ = 0;
  std::vector<Mat> basis_;
  std::vector<Mat> ad_;
  Mat killing_;
  Mat flat_;  // ambient^2 x dim, one flattened basis matrix per column
  Mat pinv_;  // dim x ambient^2
};

// Coefficients of [X, Y]; throws InvalidArgument on a length mismatch.
Vec bracket(const LieAlgebra& a, const Vec& x, const Vec& y);

// so(n), basis E_{i,j} = -D_{i,j} + D_{j,i} for i < j in lexicographic order.
LieAlgebra build_so(int n);
// Skew-Hermitian matrices realified into 2n x 2n real matrices; the complex
// entry z at (a, b) becomes the block [[Re z, -Im z], [Im z, Re z]].
// Basis: diagonal generators first, then (E_ab - E_ba), i(E_ab + E_ba) for a < b.
LieAlgebra build_u(int n);
LieAlgebra build_su(int n);
// Quaternionic skew-Hermitian matrices realified into 4n x 4n real matrices
// through left multiplication on H = R^4 (1, i, j, k order).
LieAlgebra build_sp(int n);
// g2 as the annihilator in so(7) of the associative 3-form
// e123 + e145 + e167 + e246 - e257 - e347 - e356.
LieAlgebra build_g2();

// The 3-form above as a fully antisymmetric 7x7x7 table (0-based indices).
double g2_three_form(int i, int j, int k);
// Coordinates of g2 inside build_so(7), one column per g2 basis element.
Mat g2_coordinates_in_so7();

// Realification helpers shared by the u(n) and sp(n) builders.
Mat realify_complex_unit(int n);  // i * Identity as a 2n x 2n real matrix

// Solution set {X : constraint(X) = 0} for a constraint linear in the
// ambient matrix. Returns orthonormal coefficient columns. Throws
// InvariantViolation if the result is not bracket-closed.
Mat stabilizer_subalgebra(const LieAlgebra& a, const std::function<Vec(const Mat&)>& constraint,
                          double tol = kDefaultTol);

// Intrinsic Lie algebra spanned by the given coefficient columns of a.
LieAlgebra subalgebra(const LieAlgebra& a, const Mat& coeffs, std::string name, double tol = kDefaultTol);

// Coefficient basis of the center.
Mat center(const LieAlgebra& a, double tol = kDefaultTol);

double antisymmetry_residual(const LieAlgebra& a);
double jacobi_residual(const LieAlgebra& a);
// max |K([Z,X],Y) + K(X,[Z,Y])| over basis triples.
double killing_invariance_residual(const LieAlgebra& a);

// Semisimple with a single simple factor: the commutant of the adjoint
// representation is one-dimensional and -K is nondegenerate.
bool is_simple(const LieAlgebra& a, double tol = kDefaultTol);

enum class IpKind { NegativeKilling, BPrime, CustomDiagonal };
std::string to_string(IpKind k);

struct InnerProduct {
  Mat gram;
  IpKind provenance = IpKind::NegativeKilling;
};

// B = -K. Throws InvalidArgument if it is not positive definite.
InnerProduct negative_killing(const LieAlgebra& a, double tol = kDefaultTol);
// B'(X, Y) = -(1/2) tr(XY) on the ambient matrices.
InnerProduct b_prime(const LieAlgebra& a, double tol = kDefaultTol);
InnerProduct custom_diagonal(const Vec& weights, double tol = kDefaultTol);
// Throws InvalidArgument unless gram is symmetric positive definite.
void validate(const InnerProduct& ip, double tol = kDefaultTol);

// Orthonormalizes coefficient columns against ip.
Mat gram_schmidt(const Mat& vectors, const InnerProduct& ip, double tol = kDefaultTol);

}  // namespace homspace
