#include "homspace/connections.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "homspace/error.hpp"

namespace homspace {

namespace {

using CMat = Eigen::MatrixXcd;
using cd = std::complex<double>;

CMat to_complex(const Mat& m) {
  const int n = static_cast<int>(m.rows()) / 2;
  CMat z(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) z(a, b) = cd(m(2 * a, 2 * b), m(2 * a + 1, 2 * b));
  return z;
}

Mat to_real(const CMat& z) {
  const int n = static_cast<int>(z.rows());
  Mat m(2 * n, 2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m(2 * a, 2 * b) = z(a, b).real();
      m(2 * a, 2 * b + 1) = -z(a, b).imag();
      m(2 * a + 1, 2 * b) = z(a, b).imag();
      m(2 * a + 1, 2 * b + 1) = z(a, b).real();
    }
  return m;
}

Mat lambda_matrix(const Array3& l, int a) {
  const int n = l.dim(0);
  Mat m(n, n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) m(c, b) = l(a, b, c);
  return m;
}

}  // namespace

MetricSpec MetricSpec::killing(const ReductiveSpace& s) {
  MetricSpec g;
  g.scales.assign(std::max<std::size_t>(1, s.summands.size()), 1.0);
  return g;
}

MetricSpec MetricSpec::gt(double t) {
  MetricSpec g;
  g.scales = {1.0, 2.0 * t};
  return g;
}

Vec metric_lambdas(const ReductiveSpace& s, const MetricSpec& g) {
  for (double v : g.scales) {
    if (!(v > 0.0)) throw InvalidArgument("metric scales must be positive");
  }
  const int n = s.n();
  Vec lam(n);
  if (g.scales.size() == 1) {
    lam.setConstant(g.scales[0]);
    return lam;
  }
  if (g.scales.size() != s.summands.size()) {
    throw InvalidArgument("metric has " + std::to_string(g.scales.size()) + " scales but the space has " +
                          std::to_string(s.summands.size()) + " summands");
  }
  for (int a = 0; a < n; ++a) lam(a) = g.scales[s.summand_of(a)];
  return lam;
}

Array3 to_orthonormal(const Array3& coeffs, const Vec& lambdas) {
  const int n = coeffs.dim(0);
  const Vec r = lambdas.cwiseSqrt();
  Array3 out(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) out(a, b, c) = coeffs(a, b, c) * r(c) / (r(a) * r(b));
  return out;
}

Array3 from_orthonormal(const Array3& coeffs, const Vec& lambdas) {
  const int n = coeffs.dim(0);
  const Vec r = lambdas.cwiseSqrt();
  Array3 out(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) out(a, b, c) = coeffs(a, b, c) * r(a) * r(b) / r(c);
  return out;
}

NomizuMap nomizu_alpha(const ReductiveSpace& s, double alpha) {
  const int n = s.n();
  NomizuMap map{Array3(n, n, n), MetricSpec::killing(s), "alpha=" + std::to_string(alpha)};
  const double f = (1.0 - alpha) / 2.0;
  for (std::size_t i = 0; i < map.coeffs.data().size(); ++i) map.coeffs.data()[i] = f * s.cm.data()[i];
  return map;
}

NomizuMap nomizu_levi_civita_gt(const ReductiveSpace& s, double t, double tol) {
  if (!s.two_summands()) throw InvalidArgument("nomizu_levi_civita_gt: the space must have two summands");
  if (!(t > 0.0)) throw InvalidArgument("nomizu_levi_civita_gt: t must be positive");
  for (const InclusionCheck& c : check_inclusions(s, tol)) {
    if (!c.holds) throw InvariantViolation("nomizu_levi_civita_gt: inclusion " + c.relation + " fails");
  }
  const int n = s.n();
  NomizuMap map{Array3(n, n, n), MetricSpec::gt(t), "levi-civita t=" + std::to_string(t)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool a1 = s.summand_of(a) == 0;
      const bool b1 = s.summand_of(b) == 0;
      for (int c = 0; c < n; ++c) {
        const bool c1 = s.summand_of(c) == 0;
        double v = 0.0;
        if (a1 && b1 && !c1) v = 0.5 * s.cm(a, b, c);
        else if (!a1 && b1 && c1) v = (1.0 - t) * s.cm(a, b, c);
        else if (a1 && !b1 && c1) v = t * s.cm(a, b, c);
        map.coeffs(a, b, c) = v;
      }
    }
  return map;
}

NomizuMap nomizu_st(const ReductiveSpace& s, double s_param, double t, double tol) {
  NomizuMap map = nomizu_levi_civita_gt(s, t, tol);
  for (double& v : map.coeffs.data()) v *= s_param;
  map.label = "s=" + std::to_string(s_param) + " t=" + std::to_string(t);
  return map;
}

NomizuMap nomizu_levi_civita(const ReductiveSpace& s, const MetricSpec& g) {
  const int n = s.n();
  const Vec lam = metric_lambdas(s, g);
  const Array3 cme = to_orthonormal(s.cm, lam);
  Array3 le(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) le(a, b, c) = 0.5 * (cme(a, b, c) + cme(c, a, b) + cme(c, b, a));
  return {from_orthonormal(le, lam), g, "levi-civita"};
}

NomizuMap biinvariant_family(const ReductiveSpace& s, const std::vector<Mat>& ideals, const std::vector<double>& alphas,
                             double tol) {
  if (s.p() != 0) throw InvalidArgument("biinvariant_family: the space must be a Lie group (k = 0)");
  if (ideals.size() != alphas.size()) throw InvalidArgument("biinvariant_family: one alpha per ideal is required");
  const int n = s.n();
  const Mat& G = s.ip.gram;
  std::vector<Mat> bases;
  for (const Mat& ideal : ideals) {
    const Mat q = gram_schmidt(ideal, s.ip, tol);
    for (int a = 0; a < n; ++a) {
      const Mat br = s.algebra.ad_of(s.m_basis.col(a)) * q;
      const double out = (br - q * (q.transpose() * G * br)).cwiseAbs().maxCoeff();
      if (out > 10 * tol) throw InvalidArgument("biinvariant_family: a given subspace is not an ideal");
    }
    for (const Mat& prev : bases) {
      if ((prev.transpose() * G * q).cwiseAbs().maxCoeff() > 10 * tol) {
        throw InvalidArgument("biinvariant_family: ideals are not mutually orthogonal");
      }
    }
    bases.push_back(q);
  }

  // Combined projector sum_i ((1 - alpha_i)/2) P_i in m coordinates.
  Mat proj = Mat::Zero(n, n);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Mat coords = s.m_basis.transpose() * G * bases[i];
    proj += 0.5 * (1.0 - alphas[i]) * coords * coords.transpose();
  }
  NomizuMap map{Array3(n, n, n), MetricSpec::killing(s), "bi-invariant"};
  Vec v(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) v(c) = s.cm(a, b, c);
      const Vec w = proj * v;
      for (int c = 0; c < n; ++c) map.coeffs(a, b, c) = w(c);
    }
  return map;
}

ReductiveSpace un_group_space(int n) {
  if (n < 1) throw InvalidArgument("u(n) requires n >= 1");
  LieAlgebra a = build_u(n);
  InnerProduct ip = b_prime(a);
  return decompose("u(" + std::to_string(n) + ")", std::move(a), std::move(ip), Mat(n * n, 0));
}

ExoticMaps exotic_un_maps(int n) {
  if (n < 2) throw InvalidArgument("exotic_un_maps: n must be at least 2");
  ExoticMaps out{un_group_space(n), {"eta1", {}}, {"eta2", {}}, {"eta3", {}}, {"mu", {}}};
  const ReductiveSpace& s = out.space;
  const int dim = s.n();
  const cd I(0.0, 1.0);
  const CMat id = CMat::Identity(n, n);
  const Mat mproj = s.m_basis.transpose() * s.ip.gram;

  std::vector<CMat> z;
  for (int a = 0; a < dim; ++a) z.push_back(to_complex(s.algebra.to_matrix(s.m_basis.col(a))));

  BilinearMap* maps[4] = {&out.eta1, &out.eta2, &out.eta3, &out.mu};
  for (BilinearMap* m : maps) m->coeffs = Array3(dim, dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const CMat& x = z[a];
      const CMat& y = z[b];
      const CMat values[4] = {
          I * (x * y + y * x),
          (x * y).trace() * I * id,
          x.trace() * y.trace() * I * id,
          I * (y.trace() * x - x.trace() * y),
      };
      for (int k = 0; k < 4; ++k) {
        const Mat real = to_real(values[k]);
        if (s.algebra.membership_residual(real) > 1e-9 * std::max(1.0, real.norm())) {
          throw InvariantViolation("exotic_un_maps: " + maps[k]->kind + " leaves u(n)");
        }
        const Vec c = mproj * s.algebra.coordinates(real);
        for (int e = 0; e < dim; ++e) maps[k]->coeffs(a, b, e) = c(e);
      }
    }
  return out;
}

NomizuMap as_nomizu(const BilinearMap& m) { return {m.coeffs, MetricSpec{}, m.kind}; }

Check is_metric(const NomizuMap& map, const ReductiveSpace& s, double tol) {
  const Array3 le = to_orthonormal(map.coeffs, metric_lambdas(s, map.metric));
  const int n = le.dim(0);
  double r = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b; c < n; ++c) r = std::max(r, std::abs(le(a, b, c) + le(a, c, b)));
  return {r <= tol, r};
}

Check satisfies_stc(const NomizuMap& map, double tol) {
  const Array3& l = map.coeffs;
  const int n = l.dim(0);
  double r = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = 0; c < n; ++c) r = std::max(r, std::abs(l(a, b, c) + l(b, a, c)));
  return {r <= tol, r};
}

Check is_derivation(const NomizuMap& map, const ReductiveSpace& s, double tol) {
  if (s.p() != 0) throw InvalidArgument("is_derivation: defined for Lie-group spaces (k = 0)");
  const Array3& l = map.coeffs;
  const Array3& cm = s.cm;
  const int n = s.n();
  double r = 0.0;
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int c = 0; c < n; ++c) {
          double v = 0.0;
          for (int d = 0; d < n; ++d) {
            v += cm(x, y, d) * l(z, d, c) - l(z, x, d) * cm(d, y, c) - l(z, y, d) * cm(x, d, c);
          }
          r = std::max(r, std::abs(v));
        }
  return {r <= tol, r};
}

Check equivariance(const NomizuMap& map, const ReductiveSpace& s, double tol) {
  const int n = s.n();
  std::vector<Mat> lm;
  for (int a = 0; a < n; ++a) lm.push_back(lambda_matrix(map.coeffs, a));
  double r = 0.0;
  for (const Mat& w : s.adk) {
    for (int x = 0; x < n; ++x) {
      Mat rhs = Mat::Zero(n, n);
      for (int y = 0; y < n; ++y) {
        if (w(y, x) != 0.0) rhs += w(y, x) * lm[y];
      }
      const Mat lhs = w * lm[x] - lm[x] * w;
      r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return {r <= tol, r};
}

StcRank linear_combination_stc_rank(int n, bool spanning, unsigned seed) {
  const ExoticMaps maps = exotic_un_maps(n);
  const ReductiveSpace& s = maps.space;
  const int dim = s.n();
  const Array3* tables[4] = {&maps.eta1.coeffs, &maps.eta2.coeffs, &maps.eta3.coeffs, &maps.mu.coeffs};

  std::vector<Vec> samples;
  if (spanning) {
    for (int a = 0; a < dim; ++a) samples.push_back(Vec::Unit(dim, a));
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b) samples.push_back(Vec::Unit(dim, a) + Vec::Unit(dim, b));
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    for (int k = 0; k < 2 * dim; ++k) {
      Vec x(dim);
      for (int a = 0; a < dim; ++a) x(a) = normal(rng);
      samples.push_back(x);
    }
  } else {
    const Mat unit = realify_complex_unit(n);
    samples.push_back(s.m_basis.transpose() * s.ip.gram * s.algebra.coordinates(unit));
  }

  Mat system(static_cast<Eigen::Index>(samples.size()) * dim, 4);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Vec& x = samples[k];
    for (int m = 0; m < 4; ++m) {
      const Array3& t = *tables[m];
      for (int c = 0; c < dim; ++c) {
        double v = 0.0;
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b) v += x(a) * x(b) * t(a, b, c);
        system(static_cast<Eigen::Index>(k) * dim + c, m) = v;
      }
    }
  }
  StcRank out;
  out.solution_basis = nullspace(system, 1e-9).basis;
  out.solution_dim = static_cast<int>(out.solution_basis.cols());
  out.samples = static_cast<int>(samples.size());
  for (int j = 0; j < out.solution_dim; ++j) {
    Eigen::Index idx = 0;
    out.solution_basis.col(j).cwiseAbs().maxCoeff(&idx);
    if (out.solution_basis(idx, j) < 0) out.solution_basis.col(j) *= -1.0;
  }
  return out;
}

}  // namespace homspace
