#pragma once

#include "homspace/connections.hpp"

namespace homspace {

// All tensors below live in the g-orthonormal basis e_a = Z_a / sqrt(lambda_a)
// of the map's metric.

struct TorsionTensor {
  Array3 t;  // t(a, b, c) = g(T(e_a, e_b), e_c)
  bool skew = false;
  double skew_residual = 0.0;  // max |t(a,b,c) + t(a,c,b)|
};

// T(X, Y) = Lambda(X) Y - Lambda(Y) X - [X, Y]_m.
TorsionTensor torsion(const NomizuMap& map, const ReductiveSpace& s, double tol = kDefaultTol);

// ||T||^2 = (1/6) sum_{a,b,c} t(a,b,c)^2.
double torsion_norm_sq(const TorsionTensor& t);

// r(a, b, c, d) = g(R(e_a, e_b) e_c, e_d) with
// R(X, Y) = [Lambda(X), Lambda(Y)] - Lambda([X, Y]_m) - ad([X, Y]_k).
Array4 curvature(const NomizuMap& map, const ReductiveSpace& s);

struct RicciResult {
  Mat ric;  // e basis
  double scal = 0.0;
};

// Ric(X, Y) = sum_i g(R(X, e_i) e_i, Y).
RicciResult ricci_from_curvature(const Array4& r);
RicciResult ricci_oracle(const NomizuMap& map, const ReductiveSpace& s);

// Closed forms at the ip metric:
//   Ric^alpha = ((1 - alpha^2)/4) B + ((1 + alpha^2)/2) A
//   Scal^alpha = ((1 - alpha^2)/4) sum ||[Z_i, Z_j]_m||^2 + sum A(Z_i, Z_i)
// with B = -K. Throws InvalidArgument unless g = m + [m, m].
RicciResult ricci_alpha_closed(const ReductiveSpace& s, double alpha, const Mat& qk);
inline RicciResult ricci_alpha_closed(const ReductiveSpace& s, double alpha) {
  return ricci_alpha_closed(s, alpha, default_qk(s));
}

// S(X, Y) = sum_i g(T(e_i, X), T(e_i, Y)).
Mat s_tensor(const TorsionTensor& t);
// alpha^2 (B - 2A).
Mat s_alpha_closed(const ReductiveSpace& s, double alpha);

// Block formulas for Ric of the (s, t) family on a two-summand space; the
// mixed block is zero.
RicciResult ricci_st_closed(const ReductiveSpace& s, double s_param, double t);

struct DiagonalRicci {
  double r1 = 0.0;  // Ric(X_j, X_j) in the ip-unit basis
  double r2 = 0.0;  // Ric(Y_l, Y_l)
  double a = 0.0;   // sum_i ||[X_j, X_i]_m2||^2
  double b = 0.0;   // sum_k ||[X_j, Y_k]||^2
  double c = 0.0;   // sum_i ||[Y_l, X_i]||^2
  double cas1 = 0.0, cas2 = 0.0;
};
DiagonalRicci ricci_st_diagonal(const ReductiveSpace& s, double s_param, double t, int j = 0, int l = 0);

// n(z, a, b, c) = g((nabla_{e_z} T)(e_a, e_b), e_c) with
// (nabla_Z T)(X, Y) = Lambda(Z) T(X, Y) - T(Lambda(Z) X, Y) - T(X, Lambda(Z) Y).
Array4 nabla_torsion(const NomizuMap& map, const ReductiveSpace& s);

// jac(a, b, c, d) = coefficient of Z_d in Jac_m(Z_a, Z_b, Z_c), the cyclic
// sum of [X, [Y, Z]_m]_m.
struct JacobianReport {
  Array4 jac;
  double max_abs = 0.0;
  bool vanishes = false;
  bool m_closed = false;     // [m, m] in m
  bool m_symmetric = false;  // [m, m] in k
};
JacobianReport jacobian_m(const ReductiveSpace& s, double tol = kDefaultTol);

// At t = 1/2: (nabla_Z T)(X, Y) = (s (s - 1) / 2) Jac_m(X, Y, Z) for the
// (s, 1/2) family, in the same layout as nabla_torsion.
Array4 nabla_torsion_st_closed(const ReductiveSpace& s, double s_param);

// (delta T)(X, Y) = -sum_i g((nabla_{e_i} T)(e_i, X), Y).
Mat codifferential(const Array4& nabla_t);

struct TorsionType {
  double vectorial = 0.0;  // A1
  double skew = 0.0;       // A2
  double cartan = 0.0;     // A3
};
// Splits A = Lambda - Lambda^{LC} (as g(A(X) Y, Z)) into its vectorial,
// totally skew and Cartan parts and returns their Frobenius norms.
TorsionType torsion_type(const NomizuMap& map, const ReductiveSpace& s);

// Residual of (nabla_Z T)(X, Y) = 2 {R(Z, X) Y - Lambda(Y)([Z, X] - Lambda(Z) X)}
// on a Lie-group space. Throws InvalidArgument if Lambda(X) X = 0 fails.
double verify_stary(const NomizuMap& map, const ReductiveSpace& s, double tol = kDefaultTol);

}  // namespace homspace
