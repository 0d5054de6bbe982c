#pragma once

#include <string>
#include <vector>

#include "homspace/reductive.hpp"
#include "homspace/tensor.hpp"

namespace homspace {

// Invariant metric sum_i scales[i] * ip|m_i. An unsplit space takes one scale.
struct MetricSpec {
  std::vector<double> scales{1.0};

  static MetricSpec killing(const ReductiveSpace& s);
  // g_t = ip|m1 + 2t ip|m2.
  static MetricSpec gt(double t);
};

// Per-basis-vector scale lambda_a, so that e_a = Z_a / sqrt(lambda_a) is
// g-orthonormal. Throws InvalidArgument on a non-positive or mismatched scale.
Vec metric_lambdas(const ReductiveSpace& s, const MetricSpec& g);

// Lambda(Z_a) Z_b = sum_c coeffs(a, b, c) Z_c over the ip-orthonormal m basis.
struct NomizuMap {
  Array3 coeffs;
  MetricSpec metric;
  std::string label;
};

// Coefficients in the g-orthonormal basis e_a.
Array3 to_orthonormal(const Array3& coeffs, const Vec& lambdas);
Array3 from_orthonormal(const Array3& coeffs, const Vec& lambdas);

// Lambda^alpha(X) Y = ((1 - alpha) / 2) [X, Y]_m, at the ip metric.
NomizuMap nomizu_alpha(const ReductiveSpace& s, double alpha);
// Levi-Civita map of g_t from the four block rules on m1 + m2.
NomizuMap nomizu_levi_civita_gt(const ReductiveSpace& s, double t, double tol = kDefaultTol);
// s_param * Lambda_t.
NomizuMap nomizu_st(const ReductiveSpace& s, double s_param, double t, double tol = kDefaultTol);
// Levi-Civita map of an arbitrary invariant metric from the Koszul formula.
NomizuMap nomizu_levi_civita(const ReductiveSpace& s, const MetricSpec& g);

// Bi-invariant map on a Lie group (k = 0): sum_i ((1 - alpha_i) / 2) [X, Y]_{g_i}
// over the given ideals (coefficient columns in g). The center is left out
// and receives the zero map. Throws InvalidArgument for a non-ideal or for
// ideals that are not mutually ip-orthogonal.
NomizuMap biinvariant_family(const ReductiveSpace& s, const std::vector<Mat>& ideals,
                             const std::vector<double>& alphas, double tol = kDefaultTol);

// Bilinear map over the m basis of a Lie-group space.
struct BilinearMap {
  std::string kind;
  Array3 coeffs;
};

// u(n) as a Lie-group space (k = 0) with ip = B'.
ReductiveSpace un_group_space(int n);

struct ExoticMaps {
  ReductiveSpace space;  // un_group_space(n)
  BilinearMap eta1, eta2, eta3, mu;
};
// eta1 = i(XY + YX), eta2 = tr(XY) iI, eta3 = tr(X) tr(Y) iI,
// mu = i(tr(Y) X - tr(X) Y), computed on the complex matrices.
ExoticMaps exotic_un_maps(int n);
NomizuMap as_nomizu(const BilinearMap& m);

struct Check {
  bool ok = false;
  double residual = 0.0;
};

Check is_metric(const NomizuMap& map, const ReductiveSpace& s, double tol = kDefaultTol);
// Polarized form Lambda(X) Y + Lambda(Y) X = 0 on basis pairs.
Check satisfies_stc(const NomizuMap& map, double tol = kDefaultTol);
// Leibniz defect Lambda(Z)[X,Y] - [Lambda(Z)X, Y] - [X, Lambda(Z)Y]; k = 0 only.
Check is_derivation(const NomizuMap& map, const ReductiveSpace& s, double tol = kDefaultTol);
// Infinitesimal Ad(K)-equivariance: [ad W, Lambda(X)] = Lambda([W, X]).
Check equivariance(const NomizuMap& map, const ReductiveSpace& s, double tol = kDefaultTol);

struct StcRank {
  int solution_dim = 0;
  Mat solution_basis;  // 4 x solution_dim, rows (c1, c2, c3, c)
  int samples = 0;
};
// Solves sum c_m eta_m(X, X) = 0 over (eta1, eta2, eta3, mu) for every sampled
// X. With spanning = true, X runs over the basis, pairwise sums and seeded
// random elements; otherwise X = iI only.
StcRank linear_combination_stc_rank(int n, bool spanning = true, unsigned seed = 7);

}  // namespace homspace
