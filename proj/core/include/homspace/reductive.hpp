#pragma once

#include <string>
#include <vector>

#include "homspace/liealg.hpp"
#include "homspace/tensor.hpp"

namespace homspace {

struct Summand {
  int offset = 0;
  int size = 0;
};

// g = k + m with ip-orthonormal adapted bases.
//
// The bracket tables are expressed in the m basis {Z_a} and k basis {K_q}:
//   [Z_a, Z_b]_m = sum_c cm(a, b, c) Z_c
//   [Z_a, Z_b]_k = sum_q ck(a, b, q) K_q
//   [K_q, Z_a]   = sum_c adk[q](c, a) Z_c
struct ReductiveSpace {
  std::string name;
  LieAlgebra algebra;
  InnerProduct ip;
  Mat k_basis;  // dim g x p
  Mat m_basis;  // dim g x n
  std::vector<Summand> summands;  // empty = unsplit

  Array3 cm;
  Array3 ck;
  std::vector<Mat> adk;

  int n() const { return static_cast<int>(m_basis.cols()); }
  int p() const { return static_cast<int>(k_basis.cols()); }
  bool two_summands() const { return summands.size() == 2; }
  // Summand index of m-basis vector a (0 when unsplit).
  int summand_of(int a) const;
};

// Builds a space from explicit bases. Validates orthonormality, the
// orthogonality of k and m, closure of k and [k, m] in m; throws
// InvariantViolation naming the offending bracket. Summand invariance is
// not enforced here (see check_inclusions).
ReductiveSpace assemble(std::string name, LieAlgebra algebra, InnerProduct ip, const Mat& k_basis,
                        const Mat& m_basis, std::vector<Summand> summands = {}, double tol = kDefaultTol);

// m = ip-orthocomplement of span(k_coeffs).
ReductiveSpace decompose(std::string name, LieAlgebra algebra, InnerProduct ip, const Mat& k_coeffs,
                         double tol = kDefaultTol);

// Replaces the m basis by new_m (columns in g coordinates) split as given.
ReductiveSpace with_split(const ReductiveSpace& s, const Mat& new_m, std::vector<Summand> summands,
                          double tol = kDefaultTol);

// Splits m into ad(k)-irreducible pieces: eigenspaces of the Casimir
// operator, refined by the symmetric commutant of ad(k) when an eigenspace
// is reducible. Summands are ordered by decreasing dimension.
ReductiveSpace split_isotropy(const ReductiveSpace& s, double tol = kDefaultTol);

struct InclusionCheck {
  std::string relation;
  bool holds = false;
  double residual = 0.0;
};
// [k, m_i] in m_i, [m1, m1] in k + m2, [m1, m2] in m1, [m2, m2] in k.
std::vector<InclusionCheck> check_inclusions(const ReductiveSpace& s, double tol = kDefaultTol);

// Gram matrix of Q_k in the k basis; identity means Q_k = ip restricted to k.
Mat default_qk(const ReductiveSpace& s);

struct CasimirData {
  Mat op;                          // on m, Z basis
  std::vector<double> constants;   // per summand (one entry when unsplit)
  std::vector<double> deviations;  // max |op_block - Cas I|
};
CasimirData casimir(const ReductiveSpace& s, const Mat& qk);
inline CasimirData casimir(const ReductiveSpace& s) { return casimir(s, default_qk(s)); }

// A(X, Y) = sum_j Q_k([X, Z_j]_k, [Y, Z_j]_k) in the Z basis.
Mat a_form(const ReductiveSpace& s, const Mat& qk);
// B = -K restricted to m, Z basis.
Mat killing_on_m(const ReductiveSpace& s);
// sum_i <[X, Z_i]_m, [Y, Z_i]_m>, Z basis.
Mat bracket_square_form(const ReductiveSpace& s);

struct Use1Residuals {
  double casimir_vs_a = 0.0;  // |<C X, Y> - A(X, Y)|
  double killing_split = 0.0;  // |B(X, Y) - sum <[X,Z_i]_m,[Y,Z_i]_m> - 2 A(X, Y)|
};
Use1Residuals verify_use1(const ReductiveSpace& s, const Mat& qk);

// Rank check for g = m + [m, m].
bool m_generates(const ReductiveSpace& s, double tol = kDefaultTol);

}  // namespace homspace
