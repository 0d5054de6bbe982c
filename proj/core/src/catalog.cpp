#include "homspace/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "homspace/error.hpp"

namespace homspace {

namespace {

// E_ij = -D_ij + D_ji with 1-based indices.
Mat so_unit(int n, int i, int j) {
  Mat e = Mat::Zero(n, n);
  e(i - 1, j - 1) = -1.0;
  e(j - 1, i - 1) = 1.0;
  return e;
}

Mat coords_of(const LieAlgebra& a, const std::vector<Mat>& mats) {
  Mat out(a.dim(), static_cast<Eigen::Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (a.membership_residual(mats[i]) > 1e-12) throw InvariantViolation("matrix outside " + a.name());
    out.col(static_cast<Eigen::Index>(i)) = a.coordinates(mats[i]);
  }
  return out;
}

Mat commutator_constraint(const Mat& x, const Mat& h) {
  const Mat c = x * h - h * x;
  return c;
}

InnerProduct choose_ip(const LieAlgebra& a, Normalization norm, Normalization fallback) {
  const Normalization n = norm == Normalization::Default ? fallback : norm;
  if (n == Normalization::BPrime) return b_prime(a);
  return negative_killing(a);
}

LieAlgebra parse_group(const std::string& name) {
  static const std::regex re(R"((so|su|u|sp)(\d+)|g2)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw InvalidArgument("unknown Lie group '" + name + "'");
  if (name == "g2") return build_g2();
  const int n = std::stoi(m[2].str());
  const std::string kind = m[1].str();
  if (kind == "so") return build_so(n);
  if (kind == "su") return build_su(n);
  if (kind == "u") return build_u(n);
  return build_sp(n);
}

ReductiveSpace lie_group_space(const std::string& group, Normalization norm, double tol) {
  LieAlgebra a = parse_group(group);
  InnerProduct ip;
  if (norm == Normalization::Default) {
    Eigen::SelfAdjointEigenSolver<Mat> es(-a.killing());
    const bool definite = a.dim() > 0 && es.eigenvalues().minCoeff() > tol * std::max(1.0, es.eigenvalues().maxCoeff());
    ip = definite ? negative_killing(a, tol) : b_prime(a, tol);
  } else {
    ip = choose_ip(a, norm, Normalization::NegKilling);
  }
  const int d = a.dim();
  return decompose("lie-group(" + group + ")", std::move(a), std::move(ip), Mat(d, 0), tol);
}

ReductiveSpace cp3_space(Normalization norm, double tol) {
  LieAlgebra so5 = build_so(5);
  InnerProduct ip = choose_ip(so5, norm, Normalization::BPrime);
  Mat k = coords_of(so5, cp3_k_matrices());
  Mat m = coords_of(so5, cp3_m_matrices());
  // The listed matrices are B'-orthonormal; rescale for any other multiple of B'.
  const double unit = std::sqrt((m.col(0).transpose() * ip.gram * m.col(0))(0, 0));
  k /= unit;
  m /= unit;
  return assemble("cp3", std::move(so5), std::move(ip), k, m, {{0, 4}, {4, 2}}, tol);
}

ReductiveSpace sphere_s4(Normalization norm, double tol) {
  LieAlgebra so5 = build_so(5);
  InnerProduct ip = choose_ip(so5, norm, Normalization::NegKilling);
  std::vector<Mat> k;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) k.push_back(so_unit(5, i, j));
  const Mat kc = coords_of(so5, k);
  return decompose("sphere-s4", std::move(so5), std::move(ip), kc, tol);
}

ReductiveSpace sphere_s6(Normalization norm, double tol) {
  LieAlgebra g2 = build_g2();
  InnerProduct ip = choose_ip(g2, norm, Normalization::NegKilling);
  const Mat su3 = stabilizer_subalgebra(g2, [](const Mat& x) -> Vec { return x.col(0); }, tol);
  if (su3.cols() != 8) throw InvariantViolation("sphere-s6: stabilizer of e1 in g2 has dimension " + std::to_string(su3.cols()));
  return decompose("sphere-s6", std::move(g2), std::move(ip), su3, tol);
}

ReductiveSpace sphere_s7(Normalization norm, double tol) {
  LieAlgebra so7 = build_so(7);
  InnerProduct ip = choose_ip(so7, norm, Normalization::NegKilling);
  return decompose("sphere-s7", std::move(so7), std::move(ip), g2_coordinates_in_so7(), tol);
}

// SO(3) acting on traceless symmetric 3x3 matrices, as a subalgebra of so(5).
ReductiveSpace berger_space(Normalization norm, double tol) {
  LieAlgebra so5 = build_so(5);
  InnerProduct ip = choose_ip(so5, norm, Normalization::NegKilling);
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  std::vector<Mat> sym(5, Mat::Zero(3, 3));
  sym[0](0, 0) = 1 / r2, sym[0](1, 1) = -1 / r2;
  sym[1](0, 0) = 1 / r6, sym[1](1, 1) = 1 / r6, sym[1](2, 2) = -2 / r6;
  sym[2](0, 1) = sym[2](1, 0) = 1 / r2;
  sym[3](0, 2) = sym[3](2, 0) = 1 / r2;
  sym[4](1, 2) = sym[4](2, 1) = 1 / r2;
  std::vector<Mat> k;
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
    const Mat x = so_unit(3, i, j);
    Mat rep(5, 5);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) rep(a, b) = sym[a].cwiseProduct(x * sym[b] - sym[b] * x).sum();
    k.push_back(rep);
  }
  const Mat kc = coords_of(so5, k);
  return decompose("berger", std::move(so5), std::move(ip), kc, tol);
}

int parse_int(const std::string& s) { return std::stoi(s); }

}  // namespace

void validate(const FamilySpec& f) {
  const int l = f.l, p = f.p;
  bool ok = false;
  switch (f.family) {
    case 'B':
      ok = l >= 2 && p >= 2 && p <= l;
      break;
    case 'C':
      ok = l >= 2 && p >= 1 && p <= l - 1;
      break;
    case 'D':
      ok = l >= 4 && p >= 2 && p <= l - 1;
      break;
    default:
      throw InvalidArgument(std::string("unknown flag family '") + f.family + "'");
  }
  if (!ok) {
    throw InvalidArgument(std::string("flag-") + f.family + "(" + std::to_string(l) + "," + std::to_string(p) +
                          ") is outside the family's range");
  }
}

std::pair<int, int> family_dims(const FamilySpec& f) {
  validate(f);
  const int l = f.l, p = f.p;
  switch (f.family) {
    case 'B':
      return {4 * p * (l - p) + 2 * p, p * (p - 1)};
    case 'C':
      return {4 * p * (l - p), p * (p + 1)};
    default:
      return {4 * p * (l - p), p * (p - 1)};
  }
}

std::optional<int> killing_einstein_p(char family, int l) {
  int num = 0;
  switch (family) {
    case 'B':
      num = 2 * (l + 1);
      break;
    case 'C':
      num = 2 * l - 1;
      break;
    case 'D':
      num = 2 * l + 1;
      break;
    default:
      throw InvalidArgument(std::string("unknown flag family '") + family + "'");
  }
  if (num % 3 != 0) return std::nullopt;
  const FamilySpec f{family, l, num / 3};
  try {
    validate(f);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  return num / 3;
}

std::string flag_name(const FamilySpec& f) {
  validate(f);
  const std::string l = std::to_string(f.l), p = std::to_string(f.p);
  std::string name;
  switch (f.family) {
    case 'B':
      name = "SO(" + std::to_string(2 * f.l + 1) + ")/U(" + p + ")";
      if (f.l > f.p) name += "xSO(" + std::to_string(2 * (f.l - f.p) + 1) + ")";
      break;
    case 'C':
      name = "Sp(" + l + ")/U(" + p + ")xSp(" + std::to_string(f.l - f.p) + ")";
      break;
    default:
      name = "SO(" + std::to_string(2 * f.l) + ")/U(" + p + ")xSO(" + std::to_string(2 * (f.l - f.p)) + ")";
  }
  const bool cp3 = (f.family == 'B' && f.l == 2 && f.p == 2) || (f.family == 'C' && f.l == 2 && f.p == 1);
  return cp3 ? "CP3=" + name : name;
}

std::vector<FlagTableRow> killing_einstein_table(char family, int lmax) {
  std::vector<FlagTableRow> rows;
  for (int l = 1; l <= lmax; ++l) {
    const auto p = killing_einstein_p(family, l);
    if (!p) continue;
    const FamilySpec f{family, l, *p};
    const auto [d1, d2] = family_dims(f);
    rows.push_back({l, *p, flag_name(f), d1, d2});
  }
  return rows;
}

std::vector<SpaceDescriptor> catalog_entries() {
  const char* ids[] = {"berger",          "cp3",           "flag-B(5,4)",    "flag-C(2,1)",
                       "flag-C(5,3)",     "flag-D(4,3)",   "lie-group(su2)", "lie-group(su3)",
                       "lie-group(u2)",   "sphere-s4",     "sphere-s6",      "sphere-s7"};
  std::vector<SpaceDescriptor> out;
  for (const char* id : ids) out.push_back(describe(id));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

SpaceDescriptor describe(const std::string& id) {
  static const std::regex flag_re(R"(flag-([BCD])\((\d+),(\d+)\))");
  static const std::regex group_re(R"(lie-group\((\w+)\))");
  SpaceDescriptor d;
  d.id = id;
  std::smatch m;
  if (id == "cp3") {
    d.family = "cp3";
    d.d1 = 4;
    d.d2 = 2;
    d.dim_m = 6;
    d.cas_equal = true;
    d.einstein_roots = {0.5, 1.0};
  } else if (id == "sphere-s4") {
    d.family = id;
    d.dim_m = 4;
  } else if (id == "sphere-s6") {
    d.family = id;
    d.dim_m = 6;
  } else if (id == "sphere-s7") {
    d.family = id;
    d.dim_m = 7;
  } else if (id == "berger") {
    d.family = id;
    d.dim_m = 7;
  } else if (std::regex_match(id, m, flag_re)) {
    const FamilySpec f{m[1].str()[0], parse_int(m[2].str()), parse_int(m[3].str())};
    const auto [d1, d2] = family_dims(f);
    d.family = std::string("flag-") + f.family;
    d.d1 = d1;
    d.d2 = d2;
    d.dim_m = d1 + d2;
    d.cas_equal = d1 == 2 * d2;
  } else if (std::regex_match(id, m, group_re)) {
    d.family = "lie-group";
    d.dim_m = parse_group(m[1].str()).dim();
  } else {
    throw InvalidArgument("unknown space id '" + id + "'");
  }
  return d;
}

ReductiveSpace build_flag(const FamilySpec& f, Normalization norm, double tol) {
  const auto [d1, d2] = family_dims(f);
  LieAlgebra g;
  Mat h;
  if (f.family == 'C') {
    g = build_sp(f.l);
    h = Mat::Zero(g.ambient_dim(), g.ambient_dim());
    // i E_aa for a < p sits at basis index 3a in build_sp.
    for (int a = 0; a < f.p; ++a) h += g.basis()[3 * a];
  } else {
    const int n = f.family == 'B' ? 2 * f.l + 1 : 2 * f.l;
    g = build_so(n);
    h = Mat::Zero(n, n);
    for (int i = 0; i < f.p; ++i) h += so_unit(n, 2 * i + 1, 2 * i + 2);
  }
  InnerProduct ip = choose_ip(g, norm, Normalization::NegKilling);
  const Mat kc = stabilizer_subalgebra(
      g, [&h](const Mat& x) -> Vec {
        const Mat c = commutator_constraint(x, h);
        return Eigen::Map<const Vec>(c.data(), c.size());
      },
      tol);

  const std::string id = std::string("flag-") + f.family + "(" + std::to_string(f.l) + "," + std::to_string(f.p) + ")";
  ReductiveSpace s = decompose(id, g, ip, kc, tol);

  // Grading of m by -ad(H)^2: eigenvalue 1 on m1, 4 on m2.
  const Mat adh = s.algebra.ad_of(s.algebra.coordinates(h));
  const Mat grade = -(s.m_basis.transpose() * s.ip.gram * adh * adh * s.m_basis);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (grade + grade.transpose()));
  std::vector<int> one, four;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()(i);
    if (std::abs(v - 1.0) < 1e-8) one.push_back(i);
    else if (std::abs(v - 4.0) < 1e-8) four.push_back(i);
    else throw InvariantViolation(id + ": unexpected grading eigenvalue " + std::to_string(v));
  }
  if (static_cast<int>(one.size()) != d1 || static_cast<int>(four.size()) != d2) {
    throw InvariantViolation(id + ": summand dimensions (" + std::to_string(one.size()) + ", " +
                             std::to_string(four.size()) + ") differ from the expected (" + std::to_string(d1) + ", " +
                             std::to_string(d2) + ")");
  }
  Mat local(s.n(), s.n());
  int col = 0;
  for (int i : one) local.col(col++) = es.eigenvectors().col(i);
  for (int i : four) local.col(col++) = es.eigenvectors().col(i);
  return with_split(s, s.m_basis * local, {{0, d1}, {d1, d2}}, tol);
}

ReductiveSpace build_space(const std::string& id, Normalization norm, double tol) {
  static const std::regex flag_re(R"(flag-([BCD])\((\d+),(\d+)\))");
  static const std::regex group_re(R"(lie-group\((\w+)\))");
  const SpaceDescriptor d = describe(id);
  ReductiveSpace s;
  std::smatch m;
  if (id == "cp3") s = cp3_space(norm, tol);
  else if (id == "sphere-s4") s = sphere_s4(norm, tol);
  else if (id == "sphere-s6") s = sphere_s6(norm, tol);
  else if (id == "sphere-s7") s = sphere_s7(norm, tol);
  else if (id == "berger") s = berger_space(norm, tol);
  else if (std::regex_match(id, m, flag_re)) {
    s = build_flag({m[1].str()[0], parse_int(m[2].str()), parse_int(m[3].str())}, norm, tol);
  } else if (std::regex_match(id, m, group_re)) {
    s = lie_group_space(m[1].str(), norm, tol);
  }

  if (d.dim_m && s.n() != *d.dim_m) {
    throw InvariantViolation(id + ": dim m = " + std::to_string(s.n()) + ", expected " + std::to_string(*d.dim_m));
  }
  if (d.d1) {
    if (!s.two_summands() || s.summands[0].size != *d.d1 || s.summands[1].size != *d.d2) {
      throw InvariantViolation(id + ": summand dimensions differ from the catalog");
    }
    for (const InclusionCheck& c : check_inclusions(s, tol)) {
      if (!c.holds) throw InvariantViolation(id + ": inclusion " + c.relation + " fails");
    }
  }
  return s;
}

std::vector<Mat> cp3_k_matrices() {
  const double r = 1.0 / std::sqrt(2.0);
  return {so_unit(5, 1, 2), so_unit(5, 3, 4), r * (so_unit(5, 1, 3) - so_unit(5, 2, 4)),
          r * (so_unit(5, 1, 4) + so_unit(5, 2, 3))};
}

std::vector<Mat> cp3_m_matrices() {
  const double r = 1.0 / std::sqrt(2.0);
  return {so_unit(5, 1, 5), so_unit(5, 2, 5), so_unit(5, 3, 5), so_unit(5, 4, 5),
          r * (so_unit(5, 1, 3) + so_unit(5, 2, 4)), r * (so_unit(5, 1, 4) - so_unit(5, 2, 3))};
}

}  // namespace homspace
