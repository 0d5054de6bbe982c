#include "homspace/curvature.hpp"

#include <array>
#include <cmath>

#include "homspace/error.hpp"

namespace homspace {

namespace {

// The map and bracket tables rewritten in the e basis of the map's metric.
struct Frame {
  int n = 0;
  int p = 0;
  Array3 l;                // l(a, b, c) = g(Lambda(e_a) e_b, e_c)
  Array3 cm;               // [e_a, e_b]_m
  Array3 ck;               // [e_a, e_b]_k in the K basis
  std::vector<Mat> adk;    // [K_q, e_a] in the e basis
  std::vector<Mat> lmats;  // lmats[a](c, b) = l(a, b, c)
};

Frame make_frame(const NomizuMap& map, const ReductiveSpace& s) {
  Frame f;
  f.n = s.n();
  f.p = s.p();
  const Vec lam = metric_lambdas(s, map.metric);
  const Vec r = lam.cwiseSqrt();
  f.l = to_orthonormal(map.coeffs, lam);
  f.cm = to_orthonormal(s.cm, lam);
  f.ck = Array3(f.n, f.n, f.p);
  for (int a = 0; a < f.n; ++a)
    for (int b = 0; b < f.n; ++b)
      for (int q = 0; q < f.p; ++q) f.ck(a, b, q) = s.ck(a, b, q) / (r(a) * r(b));
  for (const Mat& ad : s.adk) {
    Mat e(f.n, f.n);
    for (int c = 0; c < f.n; ++c)
      for (int a = 0; a < f.n; ++a) e(c, a) = ad(c, a) * r(c) / r(a);
    f.adk.push_back(e);
  }
  for (int a = 0; a < f.n; ++a) {
    Mat m(f.n, f.n);
    for (int b = 0; b < f.n; ++b)
      for (int c = 0; c < f.n; ++c) m(c, b) = f.l(a, b, c);
    f.lmats.push_back(m);
  }
  return f;
}

Array3 torsion_from_frame(const Frame& f) {
  Array3 t(f.n, f.n, f.n);
  for (int a = 0; a < f.n; ++a)
    for (int b = 0; b < f.n; ++b)
      for (int c = 0; c < f.n; ++c) t(a, b, c) = f.l(a, b, c) - f.l(b, a, c) - f.cm(a, b, c);
  return t;
}

Array4 nabla_from_frame(const Frame& f, const Array3& t) {
  const int n = f.n;
  Array4 out(n, n, n, n);
  for (int z = 0; z < n; ++z)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          double v = 0.0;
          for (int d = 0; d < n; ++d) {
            v += f.l(z, d, c) * t(a, b, d) - f.l(z, a, d) * t(d, b, c) - f.l(z, b, d) * t(a, d, c);
          }
          out(z, a, b, c) = v;
        }
  return out;
}

Array4 curvature_from_frame(const Frame& f) {
  const int n = f.n;
  Array4 out(n, n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat r = f.lmats[a] * f.lmats[b] - f.lmats[b] * f.lmats[a];
      for (int c = 0; c < n; ++c) {
        if (f.cm(a, b, c) != 0.0) r -= f.cm(a, b, c) * f.lmats[c];
      }
      for (int q = 0; q < f.p; ++q) {
        if (f.ck(a, b, q) != 0.0) r -= f.ck(a, b, q) * f.adk[q];
      }
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          out(a, b, c, d) = r(d, c);
          out(b, a, c, d) = -r(d, c);
        }
    }
  return out;
}

void require_two(const ReductiveSpace& s, const char* what) {
  if (!s.two_summands()) throw InvalidArgument(std::string(what) + ": the space must have two summands");
}

}  // namespace

TorsionTensor torsion(const NomizuMap& map, const ReductiveSpace& s, double tol) {
  const Frame f = make_frame(map, s);
  TorsionTensor out;
  out.t = torsion_from_frame(f);
  double r = 0.0;
  for (int a = 0; a < f.n; ++a)
    for (int b = 0; b < f.n; ++b)
      for (int c = b; c < f.n; ++c) r = std::max(r, std::abs(out.t(a, b, c) + out.t(a, c, b)));
  out.skew_residual = r;
  out.skew = r <= tol;
  return out;
}

double torsion_norm_sq(const TorsionTensor& t) { return t.t.norm_sq() / 6.0; }

Array4 curvature(const NomizuMap& map, const ReductiveSpace& s) { return curvature_from_frame(make_frame(map, s)); }

RicciResult ricci_from_curvature(const Array4& r) {
  const int n = r.dim(0);
  RicciResult out;
  out.ric = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double v = 0.0;
      for (int i = 0; i < n; ++i) v += r(a, i, i, b);
      out.ric(a, b) = v;
    }
  out.scal = out.ric.trace();
  return out;
}

RicciResult ricci_oracle(const NomizuMap& map, const ReductiveSpace& s) {
  return ricci_from_curvature(curvature(map, s));
}

RicciResult ricci_alpha_closed(const ReductiveSpace& s, double alpha, const Mat& qk) {
  if (!m_generates(s)) throw InvalidArgument("ricci_alpha_closed: g is not spanned by m and [m, m]");
  const double a2 = alpha * alpha;
  const Mat a = a_form(s, qk);
  RicciResult out;
  out.ric = 0.25 * (1.0 - a2) * killing_on_m(s) + 0.5 * (1.0 + a2) * a;
  out.scal = 0.25 * (1.0 - a2) * s.cm.norm_sq() + a.trace();
  return out;
}

Mat s_tensor(const TorsionTensor& t) {
  const int n = t.t.dim(0);
  Mat out = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double v = 0.0;
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) v += t.t(i, a, c) * t.t(i, b, c);
      out(a, b) = v;
    }
  return out;
}

Mat s_alpha_closed(const ReductiveSpace& s, double alpha) {
  return alpha * alpha * (killing_on_m(s) - 2.0 * a_form(s, default_qk(s)));
}

RicciResult ricci_st_closed(const ReductiveSpace& s, double sp, double t) {
  require_two(s, "ricci_st_closed");
  if (!(t > 0.0)) throw InvalidArgument("ricci_st_closed: t must be positive");
  const int n = s.n();
  const double c1 = (sp * sp * t - 2.0 * sp + 2.0 * sp * t) / 2.0;
  const double c2 = (sp * sp - sp * sp * t - sp) / 2.0;
  const double c3 = sp * sp * t - sp * sp * t * t - sp * t;
  auto in1 = [&](int a) { return s.summand_of(a) == 0; };
  const Mat a = a_form(s, default_qk(s));

  Mat ric = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (in1(x) != in1(y)) continue;
      double v = a(x, y);
      if (in1(x)) {
        for (int i = 0; i < n; ++i)
          for (int c = 0; c < n; ++c) {
            if (in1(i) && !in1(c)) v += c1 * s.cm(x, i, c) * s.cm(c, i, y);
            if (!in1(i) && in1(c)) v += c2 * s.cm(x, i, c) * s.cm(c, i, y);
          }
      } else {
        for (int i = 0; i < n; ++i)
          for (int c = 0; c < n; ++c) {
            if (in1(i) && in1(c)) v += c3 * s.cm(x, i, c) * s.cm(c, i, y);
          }
      }
      ric(x, y) = v;
    }
  const Vec lam = metric_lambdas(s, MetricSpec::gt(t));
  RicciResult out;
  out.ric = Mat(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.ric(x, y) = ric(x, y) / std::sqrt(lam(x) * lam(y));
  out.scal = out.ric.trace();
  return out;
}

DiagonalRicci ricci_st_diagonal(const ReductiveSpace& s, double sp, double t, int j, int l) {
  require_two(s, "ricci_st_diagonal");
  const Summand m1 = s.summands[0];
  const Summand m2 = s.summands[1];
  if (j < 0 || j >= m1.size || l < 0 || l >= m2.size) throw InvalidArgument("ricci_st_diagonal: index out of range");
  const int xj = m1.offset + j;
  const int yl = m2.offset + l;
  const int n = s.n();
  auto in1 = [&](int a) { return s.summand_of(a) == 0; };
  auto full_sq = [&](int u, int v) {
    double r = 0.0;
    for (int c = 0; c < n; ++c) r += s.cm(u, v, c) * s.cm(u, v, c);
    for (int q = 0; q < s.p(); ++q) r += s.ck(u, v, q) * s.ck(u, v, q);
    return r;
  };

  DiagonalRicci d;
  for (int i = 0; i < n; ++i) {
    if (in1(i)) {
      for (int c = 0; c < n; ++c)
        if (!in1(c)) d.a += s.cm(xj, i, c) * s.cm(xj, i, c);
      d.c += full_sq(yl, i);
    } else {
      d.b += full_sq(xj, i);
    }
  }
  const CasimirData cas = casimir(s);
  d.cas1 = cas.constants[0];
  d.cas2 = cas.constants[1];
  const double c1 = (sp * sp * t - 2.0 * sp + 2.0 * sp * t) / 2.0;
  const double c2 = (sp * sp - sp * sp * t - sp) / 2.0;
  const double c3 = sp * t * (sp - sp * t - 1.0);
  d.r1 = -c1 * d.a - c2 * d.b + d.cas1;
  d.r2 = -c3 * d.c + d.cas2;
  return d;
}

Array4 nabla_torsion(const NomizuMap& map, const ReductiveSpace& s) {
  const Frame f = make_frame(map, s);
  return nabla_from_frame(f, torsion_from_frame(f));
}

JacobianReport jacobian_m(const ReductiveSpace& s, double tol) {
  const int n = s.n();
  const Array3& cm = s.cm;
  JacobianReport out;
  out.jac = Array4(n, n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double v = 0.0;
          for (int f = 0; f < n; ++f) {
            v += cm(b, c, f) * cm(a, f, d) + cm(c, a, f) * cm(b, f, d) + cm(a, b, f) * cm(c, f, d);
          }
          out.jac(a, b, c, d) = v;
        }
  out.max_abs = out.jac.max_abs();
  out.vanishes = out.max_abs <= tol;
  out.m_closed = s.ck.max_abs() <= tol;
  out.m_symmetric = cm.max_abs() <= tol;
  return out;
}

Array4 nabla_torsion_st_closed(const ReductiveSpace& s, double sp) {
  const JacobianReport j = jacobian_m(s);
  const int n = s.n();
  const double f = sp * (sp - 1.0) / 2.0;
  Array4 out(n, n, n, n);
  for (int z = 0; z < n; ++z)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) out(z, a, b, c) = f * j.jac(a, b, z, c);
  return out;
}

Mat codifferential(const Array4& nabla_t) {
  const int n = nabla_t.dim(0);
  Mat out = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double v = 0.0;
      for (int i = 0; i < n; ++i) v += nabla_t(i, i, a, b);
      out(a, b) = -v;
    }
  return out;
}

TorsionType torsion_type(const NomizuMap& map, const ReductiveSpace& s) {
  const int n = s.n();
  const Vec lam = metric_lambdas(s, map.metric);
  const Array3 l = to_orthonormal(map.coeffs, lam);
  const Array3 lc = to_orthonormal(nomizu_levi_civita(s, map.metric).coeffs, lam);
  Array3 a(n, n, n);
  for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] = l.data()[i] - lc.data()[i];

  Vec phi = Vec::Zero(n);
  for (int z = 0; z < n; ++z)
    for (int i = 0; i < n; ++i) phi(z) += a(i, i, z);

  TorsionType out;
  double vec_sq = 0.0, skew_sq = 0.0, cartan_sq = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const double v = n > 1 ? ((x == y ? phi(z) : 0.0) - (x == z ? phi(y) : 0.0)) / (n - 1) : 0.0;
        const double k = (a(x, y, z) + a(y, z, x) + a(z, x, y) - a(y, x, z) - a(x, z, y) - a(z, y, x)) / 6.0;
        const double c = a(x, y, z) - v - k;
        vec_sq += v * v;
        skew_sq += k * k;
        cartan_sq += c * c;
      }
  out.vectorial = std::sqrt(vec_sq);
  out.skew = std::sqrt(skew_sq);
  out.cartan = std::sqrt(cartan_sq);
  return out;
}

double verify_stary(const NomizuMap& map, const ReductiveSpace& s, double tol) {
  if (s.p() != 0) throw InvalidArgument("verify_stary: defined for Lie-group spaces (k = 0)");
  const Check stc = satisfies_stc(map, tol);
  if (!stc.ok) {
    throw InvalidArgument("verify_stary: the map violates Lambda(X)X = 0 (residual " + std::to_string(stc.residual) +
                          ")");
  }
  const Frame f = make_frame(map, s);
  const Array4 nt = nabla_from_frame(f, torsion_from_frame(f));
  const Array4 r = curvature_from_frame(f);
  const int n = f.n;
  double res = 0.0;
  Vec w(n);
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x) {
      for (int d = 0; d < n; ++d) w(d) = f.cm(z, x, d) - f.l(z, x, d);
      for (int y = 0; y < n; ++y)
        for (int c = 0; c < n; ++c) {
          double ly = 0.0;
          for (int d = 0; d < n; ++d) ly += w(d) * f.l(y, d, c);
          res = std::max(res, std::abs(nt(z, x, y, c) - 2.0 * (r(z, x, y, c) - ly)));
        }
    }
  return res;
}

}  // namespace homspace
