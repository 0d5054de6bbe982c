#include "homspace/einstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "homspace/error.hpp"

namespace homspace {

namespace {

struct PerVectorSums {
  BracketSums fixed;
  BracketSums averaged;
  double spread = 0.0;
  double cas1 = 0.0, cas2 = 0.0;
};

PerVectorSums bracket_sums(const ReductiveSpace& s, double spread_tol) {
  if (!s.two_summands()) throw InvalidArgument("the space must have two isotropy summands");
  const Summand m1 = s.summands[0];
  const Summand m2 = s.summands[1];
  PerVectorSums out;
  std::vector<double> as, bs, cs;
  for (int j = 0; j < m1.size; ++j) {
    const DiagonalRicci d = ricci_st_diagonal(s, 1.0, 0.5, j, 0);
    as.push_back(d.a);
    bs.push_back(d.b);
    if (j == 0) {
      out.cas1 = d.cas1;
      out.cas2 = d.cas2;
    }
  }
  for (int l = 0; l < m2.size; ++l) cs.push_back(ricci_st_diagonal(s, 1.0, 0.5, 0, l).c);

  auto mean = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    return m / static_cast<double>(v.size());
  };
  out.fixed = {as[0], bs[0], cs[0]};
  out.averaged = {mean(as), mean(bs), mean(cs)};
  auto dev = [](const std::vector<double>& v, double m) {
    double r = 0.0;
    for (double x : v) r = std::max(r, std::abs(x - m));
    return r;
  };
  out.spread = std::max({dev(as, out.averaged.a), dev(bs, out.averaged.b), dev(cs, out.averaged.c)});
  const double scale = std::max({1.0, out.averaged.a, out.averaged.b, out.averaged.c});
  if (out.spread > spread_tol * scale) {
    throw InvariantViolation("bracket sums vary across the summand basis (spread " + std::to_string(out.spread) +
                             "); a summand is reducible or the split is wrong");
  }
  return out;
}

// Diagonal Ricci gap Ric(e_x0, e_x0) - Ric(e_y0, e_y0) of a map from the curvature trace.
double diagonal_gap(const NomizuMap& map, const ReductiveSpace& s) {
  const RicciResult r = ricci_oracle(map, s);
  const int x0 = s.summands[0].offset;
  const int y0 = s.summands[1].offset;
  return r.ric(x0, x0) - r.ric(y0, y0);
}

void classify(QuadraticReport& rep) {
  double last = std::numeric_limits<double>::quiet_NaN();
  for (double r : rep.solution.roots) {
    if (r > 0.0 && !(std::abs(r - last) <= 1e-12 * std::max(1.0, std::abs(r)))) ++rep.positive_roots;
    last = r;
  }
}

}  // namespace

QuadraticRoots solve_quadratic(double a, double b, double c, double zero_abs, double double_root_tol) {
  QuadraticRoots out;
  const bool za = std::abs(a) <= zero_abs;
  const bool zb = std::abs(b) <= zero_abs;
  const bool zc = std::abs(c) <= zero_abs;
  if (za) {
    out.degenerate = true;
    if (zb) {
      out.identically_zero = zc;
      return out;
    }
    out.roots.push_back(-c / b);
    return out;
  }
  out.discriminant = b * b - 4.0 * a * c;
  if (std::abs(out.discriminant) <= double_root_tol * std::max(b * b, std::abs(4.0 * a * c))) {
    out.roots = {-b / (2.0 * a), -b / (2.0 * a)};
    return out;
  }
  if (out.discriminant < 0.0) return out;
  const double q = -0.5 * (b + std::copysign(std::sqrt(out.discriminant), b));
  double r1 = q / a;
  double r2 = q != 0.0 ? c / q : -r1;
  if (r1 > r2) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

QuadraticReport riemannian_quadratic(const ReductiveSpace& s, double spread_tol) {
  const PerVectorSums sums = bracket_sums(s, spread_tol);
  QuadraticReport rep;
  rep.fixed = sums.fixed;
  rep.averaged = sums.averaged;
  rep.spread = sums.spread;
  rep.dcas = sums.cas1 - sums.cas2;
  const BracketSums& f = sums.fixed;
  rep.alpha = -3.0 * f.a + f.b - f.c;
  rep.beta = 2.0 * (f.a + sums.cas1);
  rep.gamma = -sums.cas2;
  const double scale = std::max({1.0, f.a, f.b, f.c, sums.cas1, sums.cas2});
  rep.solution = solve_quadratic(rep.alpha, rep.beta, rep.gamma, 1e-12 * scale);
  for (double t : rep.solution.roots) {
    if (t > 0.0) {
      rep.root_residuals.push_back(std::abs(diagonal_gap(nomizu_levi_civita_gt(s, t), s)));
    } else {
      // No g_t metric exists for t <= 0.
      rep.root_residuals.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    if (std::abs(t - 0.5) <= 1e-8) rep.killing_root = true;
    if (std::abs(t - 1.0) <= 1e-8) rep.kahler_root = true;
  }
  classify(rep);
  return rep;
}

QuadraticReport skew_einstein_quadratic(const ReductiveSpace& s, double spread_tol) {
  const PerVectorSums sums = bracket_sums(s, spread_tol);
  QuadraticReport rep;
  rep.fixed = sums.fixed;
  rep.averaged = sums.averaged;
  rep.spread = sums.spread;
  const BracketSums& f = sums.fixed;
  rep.cc = f.a + f.b - f.c;
  rep.dcas = sums.cas1 - sums.cas2;
  rep.alpha = rep.cc;
  rep.beta = -2.0 * rep.cc;
  rep.gamma = -4.0 * rep.dcas;
  const double scale = std::max({1.0, f.a, f.b, f.c, sums.cas1, sums.cas2});
  rep.solution = skew_einstein_roots(rep.cc, rep.dcas, 1e-9 * scale);
  for (double sp : rep.solution.roots) rep.root_residuals.push_back(std::abs(skew_einstein_defect(s, sp)));
  classify(rep);
  return rep;
}

QuadraticRoots skew_einstein_roots(double cc, double dcas, double zero_abs) {
  QuadraticRoots q = solve_quadratic(cc, -2.0 * cc, -4.0 * dcas, zero_abs);
  q.discriminant = 4.0 * cc * (cc + 4.0 * dcas);
  return q;
}

double skew_einstein_defect(const ReductiveSpace& s, double s_param) {
  return diagonal_gap(nomizu_st(s, s_param, 0.5), s);
}

double nabla_alpha_einstein_residual(const ReductiveSpace& s, double alpha) {
  const RicciResult r = ricci_oracle(nomizu_alpha(s, alpha), s);
  const int n = s.n();
  if (n == 0) return 0.0;
  const Mat sym = 0.5 * (r.ric + r.ric.transpose());
  return (sym - (r.scal / n) * Mat::Identity(n, n)).cwiseAbs().maxCoeff();
}

CasimirBracketIdentity casimir_bracket_identity(const ReductiveSpace& s) {
  if (s.summands.size() > 1) throw InvalidArgument("casimir_bracket_identity: the space must be isotropy irreducible");
  const CasimirData cas = casimir(s);
  CasimirBracketIdentity out;
  const int n = s.n();
  out.cas = cas.constants[0];
  out.bracket_sum = s.cm.norm_sq();
  out.killing_trace = killing_on_m(s).trace();
  out.residual = 2.0 * n * out.cas + out.bracket_sum - out.killing_trace;
  return out;
}

}  // namespace homspace
