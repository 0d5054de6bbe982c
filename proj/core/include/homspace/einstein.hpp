#pragma once

#include <vector>

#include "homspace/curvature.hpp"

namespace homspace {

struct QuadraticRoots {
  std::vector<double> roots;  // ascending; a double root appears twice
  double discriminant = 0.0;
  bool degenerate = false;   // leading coefficient ~ 0
  bool identically_zero = false;  // every coefficient ~ 0: all values solve it
};

// Real roots of a x^2 + b x + c = 0. Coefficients with magnitude at most
// zero_abs count as zero; |disc| <= double_root_tol * max(b^2, |4ac|) gives a
// double root.
QuadraticRoots solve_quadratic(double a, double b, double c, double zero_abs, double double_root_tol = 1e-10);

struct BracketSums {
  double a = 0.0;  // sum_i ||[X_j, X_i]_m2||^2
  double b = 0.0;  // sum_k ||[X_j, Y_k]||^2
  double c = 0.0;  // sum_i ||[Y_l, X_i]||^2
};

struct QuadraticReport {
  // alpha t^2 + beta t + gamma (Riemannian) or cc s^2 - 2 cc s - 4 dcas (skew).
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double cc = 0.0;    // skew only
  double dcas = 0.0;  // Cas1 - Cas2
  BracketSums fixed;  // j = l = 0
  BracketSums averaged;
  double spread = 0.0;  // max deviation of the per-vector sums from the average
  QuadraticRoots solution;
  std::vector<double> root_residuals;
  bool killing_root = false;  // t = 1/2 (Riemannian)
  bool kahler_root = false;   // t = 1 (Riemannian)
  int positive_roots = 0;
};

// Einstein condition for g_t on a two-summand space. Throws
// InvariantViolation if the per-vector bracket sums spread beyond
// spread_tol (non-irreducible summand or wrong split).
QuadraticReport riemannian_quadratic(const ReductiveSpace& s, double spread_tol = 1e-8);

// Einstein condition for nabla^{s, 1/2} at the Killing metric.
QuadraticReport skew_einstein_quadratic(const ReductiveSpace& s, double spread_tol = 1e-8);

// Roots of cc s^2 - 2 cc s - 4 dcas = 0 from the coefficients alone. On an
// actual space with ip a multiple of B one has cc = 2 (Cas2 - Cas1), so
// dcas = 0 forces cc = 0 and every s solves the equation.
QuadraticRoots skew_einstein_roots(double cc, double dcas, double zero_abs = 1e-12);

// Ric^{s,1/2}(X_j, X_j) - Ric^{s,1/2}(Y_l, Y_l) from the trace-of-curvature Ricci.
double skew_einstein_defect(const ReductiveSpace& s, double s_param);

// max |Ric^alpha - (Scal^alpha / n) g| with Ric^alpha from the curvature trace.
double nabla_alpha_einstein_residual(const ReductiveSpace& s, double alpha);

struct CasimirBracketIdentity {
  double residual = 0.0;  // 2 n Cas + sum ||[Z_i, Z_j]_m||^2 - sum B(Z_i, Z_i)
  double cas = 0.0;
  double bracket_sum = 0.0;
  double killing_trace = 0.0;  // equals n when ip = B
};
// Isotropy-irreducible spaces. B = -K; with ip = B the last term is n.
CasimirBracketIdentity casimir_bracket_identity(const ReductiveSpace& s);

}  // namespace homspace
