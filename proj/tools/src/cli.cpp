#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "format.hpp"
#include "homspace/catalog.hpp"
#include "homspace/connections.hpp"
#include "homspace/curvature.hpp"
#include "homspace/einstein.hpp"
#include "homspace/equivariant.hpp"
#include "homspace/error.hpp"
#include "homspace/reductive.hpp"

namespace homspace::cli {

namespace {

constexpr double kOracleTol = 1e-8;

struct Globals {
  std::string format = "table";
  double tol = 1e-9;
  unsigned seed = 1;
  std::string normalization;
  std::string out;
};

struct Outcome {
  Json record;
  bool ok = true;
};

Normalization parse_normalization(const std::string& s) {
  if (s.empty()) return Normalization::Default;
  if (s == "negK") return Normalization::NegKilling;
  if (s == "bprime") return Normalization::BPrime;
  throw InvalidArgument("unknown normalization '" + s + "' (expected negK or bprime)");
}

Json null_number(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json record(const std::string& space, std::optional<double> t, Json params) {
  Json r;
  r["space"] = space;
  r["metric"] = Json{{"t", null_number(t)}};
  r["params"] = params.is_null() ? Json::object() : std::move(params);
  r["result"] = Json::object();
  r["residuals"] = Json::object();
  r["tolerances"] = Json::object();
  return r;
}

// Metric parameter of the ip metric: g_{1/2} on a two-summand space, none otherwise.
std::optional<double> ip_t(const ReductiveSpace& s) {
  return s.two_summands() ? std::optional<double>(0.5) : std::nullopt;
}

double max_abs_diff(const Mat& a, const Mat& b) { return a.rows() ? (a - b).cwiseAbs().maxCoeff() : 0.0; }

ReductiveSpace load(const std::string& id, const Globals& g) {
  return build_space(id, parse_normalization(g.normalization), kDefaultTol);
}

// ---- catalog list ----

Outcome catalog_list(const std::optional<std::string>& family, int lmax, bool killing_einstein) {
  Outcome o{record("catalog", std::nullopt, Json::object())};
  Json rows = Json::array();
  if (!family) {
    if (killing_einstein) throw InvalidArgument("--killing-einstein requires --family");
    for (const SpaceDescriptor& d : catalog_entries()) {
      rows.push_back(Json{{"id", d.id},
                          {"family", d.family},
                          {"dim_m", d.dim_m ? Json(*d.dim_m) : Json(nullptr)},
                          {"d1", d.d1 ? Json(*d.d1) : Json(nullptr)},
                          {"d2", d.d2 ? Json(*d.d2) : Json(nullptr)}});
    }
  } else {
    if (family->size() != 1) throw InvalidArgument("unknown flag family '" + *family + "'");
    const char f = (*family)[0];
    o.record["params"] = Json{{"family", *family}, {"lmax", lmax}, {"killing_einstein", killing_einstein}};
    if (killing_einstein) {
      for (const FlagTableRow& r : killing_einstein_table(f, lmax)) {
        rows.push_back(Json{{"l", r.l}, {"p", r.p}, {"name", r.name}, {"d1", r.d1}, {"d2", r.d2}});
      }
    } else {
      for (int l = 2; l <= lmax; ++l)
        for (int p = 1; p <= l; ++p) {
          const FamilySpec spec{f, l, p};
          try {
            validate(spec);
          } catch (const InvalidArgument&) {
            continue;
          }
          const auto [d1, d2] = family_dims(spec);
          rows.push_back(Json{{"l", l},
                              {"p", p},
                              {"name", flag_name(spec)},
                              {"d1", d1},
                              {"d2", d2},
                              {"killing_einstein", d1 == 2 * d2}});
        }
    }
  }
  o.record["result"]["rows"] = std::move(rows);
  return o;
}

// ---- space build ----

Outcome space_build(const std::string& id, const Globals& g) {
  const ReductiveSpace s = load(id, g);
  Outcome o{record(id, ip_t(s), Json::object())};
  Json& r = o.record["result"];
  r["algebra"] = s.algebra.name();
  r["dim_g"] = s.algebra.dim();
  r["dim_k"] = s.p();
  r["dim_m"] = s.n();
  r["inner_product"] = to_string(s.ip.provenance);
  Json dims = Json::array();
  for (const Summand& m : s.summands) dims.push_back(m.size);
  r["summands"] = dims;
  const CasimirData cas = casimir(s);
  r["casimir"] = cas.constants;
  r["simple"] = is_simple(s.algebra);

  Json& res = o.record["residuals"];
  res["antisymmetry"] = antisymmetry_residual(s.algebra);
  res["jacobi"] = jacobi_residual(s.algebra);
  res["killing_invariance"] = killing_invariance_residual(s.algebra);
  double worst_dev = 0.0;
  for (double d : cas.deviations) worst_dev = std::max(worst_dev, d);
  res["casimir_scalar"] = worst_dev;
  Json incl = Json::object();
  if (s.two_summands()) {
    for (const InclusionCheck& c : check_inclusions(s, g.tol)) {
      incl[c.relation] = c.residual;
      o.ok = o.ok && c.holds;
    }
  }
  res["inclusions"] = incl;
  o.record["tolerances"]["tol"] = g.tol;
  return o;
}

// ---- tensor ----

struct MapChoice {
  NomizuMap map;
  Json params;
  std::optional<double> t;
  std::optional<RicciResult> closed;
};

MapChoice choose_map(const ReductiveSpace& s, std::optional<double> alpha, std::optional<double> sp,
                     std::optional<double> t, bool want_closed) {
  if (alpha && (sp || t)) throw InvalidArgument("--alpha cannot be combined with --s/--t");
  if (sp.has_value() != t.has_value()) throw InvalidArgument("--s and --t must be given together");
  MapChoice c;
  if (sp) {
    if (!s.two_summands()) throw InvalidArgument(s.name + ": --s/--t needs a two-summand space");
    if (!(*t > 0.0)) throw InvalidArgument("--t must be positive");
    c.map = nomizu_st(s, *sp, *t);
    c.params = Json{{"s", *sp}};
    c.t = *t;
    if (want_closed) c.closed = ricci_st_closed(s, *sp, *t);
  } else {
    const double a = alpha.value_or(0.0);
    c.map = nomizu_alpha(s, a);
    c.params = Json{{"alpha", a}};
    c.t = ip_t(s);
    if (want_closed && m_generates(s)) c.closed = ricci_alpha_closed(s, a);
  }
  return c;
}

Outcome tensor_ricci(const ReductiveSpace& s, const MapChoice& c, const Globals& g) {
  Outcome o{record(s.name, c.t, c.params)};
  const RicciResult ric = ricci_oracle(c.map, s);
  Json& r = o.record["result"];
  r["basis"] = "g-orthonormal";
  r["ric"] = matrix_json(ric.ric);
  r["scal"] = ric.scal;
  o.record["residuals"]["asymmetry"] = asymmetry(ric.ric);
  if (c.closed) {
    const double d = max_abs_diff(ric.ric, c.closed->ric);
    o.record["residuals"]["closed_form_vs_curvature"] = d;
    o.ok = d <= kOracleTol;
  } else {
    o.record["residuals"]["closed_form_vs_curvature"] = nullptr;
  }
  o.record["tolerances"] = Json{{"tol", g.tol}, {"oracle", kOracleTol}};
  return o;
}

Outcome tensor_torsion(const ReductiveSpace& s, const MapChoice& c, const Globals& g) {
  Outcome o{record(s.name, c.t, c.params)};
  const TorsionTensor tt = torsion(c.map, s, g.tol);
  const TorsionType type = torsion_type(c.map, s);
  Json& r = o.record["result"];
  r["basis"] = "g-orthonormal";
  r["skew"] = tt.skew;
  r["norm_sq"] = torsion_norm_sq(tt);
  r["type"] = Json{{"vectorial", type.vectorial}, {"skew", type.skew}, {"cartan", type.cartan}};
  Json comps = Json::array();
  const int n = s.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int k = 0; k < n; ++k)
        if (std::abs(tt.t(a, b, k)) > g.tol) comps.push_back(Json::array({a, b, k, tt.t(a, b, k)}));
  r["components"] = comps;
  o.record["residuals"]["skew"] = tt.skew_residual;
  o.record["tolerances"]["tol"] = g.tol;
  return o;
}

Outcome tensor_scalar(const ReductiveSpace& s, const MapChoice& c, const Globals& g) {
  Outcome o{record(s.name, c.t, c.params)};
  const RicciResult ric = ricci_oracle(c.map, s);
  const RicciResult lc = ricci_oracle(nomizu_levi_civita(s, c.map.metric), s);
  const TorsionTensor tt = torsion(c.map, s, g.tol);
  const double tn = torsion_norm_sq(tt);
  Json& r = o.record["result"];
  r["scal"] = ric.scal;
  r["scal_riemannian"] = lc.scal;
  r["torsion_norm_sq"] = tn;
  r["skew_torsion"] = tt.skew;
  if (tt.skew) {
    const double d = std::abs(ric.scal - (lc.scal - 1.5 * tn));
    o.record["residuals"]["scal_minus_riemannian_plus_three_halves_torsion"] = d;
    o.ok = d <= kOracleTol;
  } else {
    o.record["residuals"]["scal_minus_riemannian_plus_three_halves_torsion"] = nullptr;
  }
  o.record["tolerances"] = Json{{"tol", g.tol}, {"oracle", kOracleTol}};
  return o;
}

// ---- einstein ----

Json quadratic_json(const QuadraticRoots& q) {
  return Json{{"roots", q.roots},
              {"discriminant", q.discriminant},
              {"degenerate", q.degenerate},
              {"identically_zero", q.identically_zero}};
}

Outcome einstein_riemannian(const ReductiveSpace& s, const Globals& g) {
  if (!s.two_summands()) throw InvalidArgument(s.name + ": the g_t Einstein equation needs two summands");
  const QuadraticReport q = riemannian_quadratic(s);
  Outcome o{record(s.name, std::nullopt, Json::object())};
  Json& r = o.record["result"];
  r["coefficients"] = {q.alpha, q.beta, q.gamma};
  r.update(quadratic_json(q.solution));
  r["killing_root"] = q.killing_root;
  r["kahler_root"] = q.kahler_root;
  r["positive_roots"] = q.positive_roots;
  r["casimir"] = casimir(s).constants;
  o.record["residuals"] = Json{{"roots", q.root_residuals}, {"bracket_sum_spread", q.spread}};
  o.record["tolerances"] = Json{{"tol", g.tol}};
  return o;
}

Outcome einstein_skew(const ReductiveSpace& s, const Globals& g) {
  if (!s.two_summands()) throw InvalidArgument(s.name + ": the skew-torsion Einstein equation needs two summands");
  const QuadraticReport q = skew_einstein_quadratic(s);
  Outcome o{record(s.name, 0.5, Json::object())};
  Json& r = o.record["result"];
  r["coefficients"] = {q.cc, -2.0 * q.cc, -4.0 * q.dcas};
  r.update(quadratic_json(q.solution));
  r["every_s_solves"] = q.solution.identically_zero;
  r["casimir"] = casimir(s).constants;
  // Direct check of the canonical and anti-canonical connections.
  Json defects = Json::object();
  for (double sp : {0.0, 2.0}) defects[number(sp, 3)] = skew_einstein_defect(s, sp);
  o.record["residuals"] = Json{{"roots", q.root_residuals}, {"einstein_defect_at_s", defects},
                               {"bracket_sum_spread", q.spread}};
  o.record["tolerances"] = Json{{"tol", g.tol}};
  return o;
}

// ---- homdim ----

Outcome homdim(const ReductiveSpace& s, const Globals& g) {
  const HomResult h = hom_dimension(s);
  const BracketCertificate cert = certify_bracket_span(h, s, g.tol);
  Outcome o{record(s.name, ip_t(s), Json::object())};
  o.record["params"] = Json{{"seed", g.seed}};
  Json& r = o.record["result"];
  r["dimension"] = h.dimension;
  r["skew"] = h.skew;
  r["symmetric"] = h.symmetric;
  r["singular_value_gap"] = h.gap;
  r["bracket_in_span"] = cert.bracket_in_span;
  r["complement_dim"] = cert.complement_dim;
  o.record["residuals"] = Json{{"basis", h.max_residual},
                               {"bracket", cert.system_residual},
                               {"group_spot_check", group_spot_check(h, s, 10, g.seed)}};
  o.record["tolerances"] = Json{{"tol", g.tol}, {"min_gap", 1e3}};
  return o;
}

// ---- check ----

struct CheckRow {
  std::string check;
  double residual;
  double tol;
};

std::vector<CheckRow> invariant_checks(const ReductiveSpace& s, double tol) {
  std::vector<CheckRow> rows;
  rows.push_back({"antisymmetry", antisymmetry_residual(s.algebra), tol});
  rows.push_back({"jacobi", jacobi_residual(s.algebra), tol});
  rows.push_back({"killing_invariance", killing_invariance_residual(s.algebra), tol});
  if (s.two_summands()) {
    for (const InclusionCheck& c : check_inclusions(s, tol)) {
      rows.push_back({"inclusion " + c.relation, c.holds ? c.residual : std::max(c.residual, 2 * tol), tol});
    }
  }
  const Use1Residuals u = verify_use1(s, default_qk(s));
  rows.push_back({"casimir_vs_a_form", u.casimir_vs_a, kOracleTol});
  rows.push_back({"killing_split", u.killing_split, kOracleTol});
  const CasimirData cas = casimir(s);
  double dev = 0.0;
  for (double d : cas.deviations) dev = std::max(dev, d);
  rows.push_back({"casimir_scalar_on_summands", dev, kOracleTol});
  return rows;
}

std::vector<CheckRow> oracle_checks(const ReductiveSpace& s, double tol) {
  std::vector<CheckRow> rows;
  if (m_generates(s)) {
    for (double a : {-1.0, 0.0, 0.5, 2.0}) {
      const RicciResult closed = ricci_alpha_closed(s, a);
      const RicciResult trace = ricci_oracle(nomizu_alpha(s, a), s);
      rows.push_back({"ricci alpha=" + number(a, 3), max_abs_diff(closed.ric, trace.ric), kOracleTol});
    }
  }
  if (s.two_summands()) {
    for (double sp : {0.0, 2.0})
      for (double t : {0.3, 0.5, 1.0}) {
        const RicciResult closed = ricci_st_closed(s, sp, t);
        const RicciResult trace = ricci_oracle(nomizu_st(s, sp, t), s);
        rows.push_back({"ricci s=" + number(sp, 3) + " t=" + number(t, 3), max_abs_diff(closed.ric, trace.ric),
                        kOracleTol});
      }
  }
  const NomizuMap can = nomizu_alpha(s, 0.0);
  const TorsionTensor tt = torsion(can, s, tol);
  if (tt.skew) {
    const RicciResult ric = ricci_oracle(can, s);
    const RicciResult lc = ricci_oracle(nomizu_levi_civita(s, can.metric), s);
    rows.push_back({"scalar identity alpha=0", std::abs(ric.scal - (lc.scal - 1.5 * torsion_norm_sq(tt))), kOracleTol});
  }
  return rows;
}

Outcome check(const std::vector<std::string>& ids, const std::string& suite, const Globals& g) {
  if (suite != "invariants" && suite != "oracle" && suite != "all") {
    throw InvalidArgument("unknown suite '" + suite + "' (expected invariants, oracle or all)");
  }
  Outcome o{record(ids.size() == 1 ? ids[0] : "all", std::nullopt, Json{{"suite", suite}})};
  Json rows = Json::array();
  int failed = 0;
  for (const std::string& id : ids) {
    const ReductiveSpace s = load(id, g);
    std::vector<CheckRow> all;
    if (suite != "oracle") all = invariant_checks(s, g.tol);
    if (suite != "invariants") {
      const std::vector<CheckRow> more = oracle_checks(s, g.tol);
      all.insert(all.end(), more.begin(), more.end());
    }
    for (const CheckRow& c : all) {
      const bool pass = c.residual <= c.tol;
      failed += pass ? 0 : 1;
      rows.push_back(Json{{"space", id}, {"check", c.check}, {"residual", c.residual}, {"tol", c.tol}, {"pass", pass}});
    }
  }
  o.record["result"]["failed"] = failed;
  o.record["result"]["rows"] = std::move(rows);
  o.record["tolerances"] = Json{{"tol", g.tol}, {"oracle", kOracleTol}};
  o.ok = failed == 0;
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant connections, curvature and Einstein equations on reductive homogeneous spaces",
               "homspace"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "structural tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized spot checks")->capture_default_str();
  app.add_option("--normalization", g.normalization, "negK or bprime")
      ->check(CLI::IsMember({"negK", "bprime"}));
  app.add_option("--out", g.out, "write output to this file");

  std::optional<Outcome> outcome;
  auto guard = [&](auto&& fn) { return [&, fn] { outcome = fn(); }; };

  auto* catalog = app.add_subcommand("catalog", "catalog queries")->require_subcommand(1)->fallthrough();
  auto* list = catalog->add_subcommand("list", "list catalog spaces or flag-family rows")->fallthrough();
  std::optional<std::string> family;
  int lmax = 10;
  bool killing_einstein = false;
  list->add_option("--family", family, "B, C or D");
  list->add_option("--lmax", lmax, "largest rank")->capture_default_str();
  list->add_flag("--killing-einstein", killing_einstein, "only rows where the Killing metric is Einstein");
  list->callback(guard([&] { return catalog_list(family, lmax, killing_einstein); }));

  auto* space = app.add_subcommand("space", "space construction")->require_subcommand(1)->fallthrough();
  auto* build = space->add_subcommand("build", "build and validate a space")->fallthrough();
  std::string build_id;
  build->add_option("id", build_id, "space id")->required();
  build->callback(guard([&] { return space_build(build_id, g); }));

  auto* tensor = app.add_subcommand("tensor", "tensors of a connection")->require_subcommand(1)->fallthrough();
  std::string tensor_space;
  std::optional<double> alpha, sp, tp;
  for (const char* kind : {"ricci", "torsion", "scalar"}) {
    auto* sub = tensor->add_subcommand(kind)->fallthrough();
    sub->add_option("--space", tensor_space, "space id")->required();
    sub->add_option("--alpha", alpha, "nabla^alpha at the ip metric");
    sub->add_option("--s", sp, "s of nabla^{s,t}");
    sub->add_option("--t", tp, "t of nabla^{s,t}");
    const std::string k = kind;
    sub->callback(guard([&, k] {
      const ReductiveSpace s = load(tensor_space, g);
      const MapChoice c = choose_map(s, alpha, sp, tp, k == "ricci");
      if (k == "ricci") return tensor_ricci(s, c, g);
      if (k == "torsion") return tensor_torsion(s, c, g);
      return tensor_scalar(s, c, g);
    }));
  }

  auto* einstein = app.add_subcommand("einstein", "Einstein equations")->require_subcommand(1)->fallthrough();
  std::string einstein_space;
  for (const char* kind : {"riemannian", "skew"}) {
    auto* sub = einstein->add_subcommand(kind)->fallthrough();
    sub->add_option("--space", einstein_space, "space id")->required();
    const std::string k = kind;
    sub->callback(guard([&, k] {
      const ReductiveSpace s = load(einstein_space, g);
      return k == "riemannian" ? einstein_riemannian(s, g) : einstein_skew(s, g);
    }));
  }

  auto* hom = app.add_subcommand("homdim", "dimension of equivariant bilinear maps on m")->fallthrough();
  std::string hom_space;
  hom->add_option("--space", hom_space, "space id")->required();
  hom->callback(guard([&] { return homdim(load(hom_space, g), g); }));

  auto* chk = app.add_subcommand("check", "run verification suites")->fallthrough();
  std::string check_space, suite = "all";
  bool check_all = false;
  auto* space_opt = chk->add_option("--space", check_space, "space id");
  chk->add_flag("--all", check_all, "every catalog space")->excludes(space_opt);
  chk->add_option("--suite", suite, "invariants, oracle or all")->capture_default_str();
  chk->callback(guard([&] {
    std::vector<std::string> ids;
    if (check_all) {
      for (const SpaceDescriptor& d : catalog_entries()) ids.push_back(d.id);
    } else if (!check_space.empty()) {
      ids.push_back(check_space);
    } else {
      throw InvalidArgument("check needs --space <id> or --all");
    }
    return check(ids, suite, g);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (!outcome) return 0;

  const Format f = parse_format(g.format);
  if (!g.out.empty()) {
    std::ofstream file(g.out);
    if (!file) {
      err << "error: cannot open " << g.out << '\n';
      return 2;
    }
    write(file, outcome->record, f);
  } else {
    write(out, outcome->record, f);
  }
  return outcome->ok ? 0 : 1;
}

}  // namespace homspace::cli
