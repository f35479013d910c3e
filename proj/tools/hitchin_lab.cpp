// hitchin-lab: batch front end. Subcommands: analyze, classify,
// halfflat-check, flow, kappa, curvature, signature. JSON reports on stdout
// or --out; exit 0 on success, 2 on mathematical rejection, 1 on I/O errors.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hitchinlab/curvature.hpp"
#include "hitchinlab/flow.hpp"
#include "hitchinlab/io.hpp"
#include "hitchinlab/spkahler.hpp"

using namespace hlab;
using nlohmann::json;

namespace {

struct Options {
  std::string algebra = "h3h3";
  std::string omega, rho;
  std::string mode = "exact";  // exact | float
  std::string out;
  std::string kind = "parallel";  // flow kind
  double tol = kFloatTol;
  double h = 1e-3;
  double lambda = 0;
  double t_end = 1.0;
  int points = 5;
  double fd_step = 1e-5;
  std::string signature_case;
  bool seven = false;
  bool adaptive = false;
};

KForm<Quad> load_form(const std::string& spec, int n = 0) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw std::runtime_error("cannot open " + spec.substr(1));
    json j;
    in >> j;
    return form_from_json(j, n);
  }
  return parse_form(spec, n);
}

void emit(const Options& opt, const json& j) {
  if (opt.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(opt.out);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    out << j.dump(2) << "\n";
  }
}

json inertia_json(const Inertia& in) { return json{{"plus", in.pos}, {"minus", in.neg}}; }

template <class S>
json matrix_json(const Matrix<S>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class S>
json pair_report(const StablePair<S>& pair) {
  return json{{"lambda", scalar_to_string(pair.lambda)},
              {"epsilon", pair.epsilon},
              {"signature", inertia_json(pair.signature)},
              {"label", pair.label},
              {"normalized", pair.normalized},
              {"volumes",
               {{"phi_rho", scalar_to_string(pair.phi_rho)},
                {"phi_omega", scalar_to_string(pair.phi_omega)}}}};
}

// family parameters of a closed three-form compatible with omega_1
std::array<Quad, 9> family_params(const KForm<Quad>& rho) {
  auto gens = rho1_generators<Quad>();
  Matrix<Quad> m(20, 10);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 20; ++j) m(j, i) = gens[size_t(i)].c[size_t(j)];
  for (int j = 0; j < 20; ++j) m(j, 9) = rho.c[size_t(j)];
  auto ns = nullspace(m);
  if (ns.size() != 1 || is_zero(ns[0][9]))
    fail(Err::WrongNormalForm, "rho is not in the omega_1 family");
  std::array<Quad, 9> a;
  for (int i = 0; i < 9; ++i) a[size_t(i)] = -ns[0][size_t(i)] / ns[0][9];
  return a;
}

int cmd_analyze(const Options& opt) {
  KForm<Quad> rho = load_form(opt.rho);
  if (rho.n < 6) rho = load_form(opt.rho, 6);  // three-form analysis lives in dimension >= 6
  json rep;
  if (opt.omega.empty()) {
    if (opt.mode == "float") {
      auto cls = j_and_dual(to_float(rho), Orientation<double>{rho.n, 1.0});
      rep = {{"lambda", cls.lambda}, {"epsilon", cls.epsilon}, {"dual", form_to_json(cls.dual)}};
    } else {
      auto cls = j_and_dual(rho, Orientation<Quad>{rho.n, Quad(1)});
      rep = {{"lambda", scalar_to_string(cls.lambda)},
             {"epsilon", cls.epsilon},
             {"dual", form_to_json(cls.dual)}};
    }
  } else {
    KForm<Quad> omega = load_form(opt.omega, rho.n);
    if (opt.mode == "float") {
      auto pair = pair_analyze(to_float(omega), to_float(rho), Orientation<double>{rho.n, 1.0},
                               PairOptions{opt.tol});
      rep = pair_report(pair);
      rep["metric"] = matrix_json(pair.metric);
    } else {
      auto pair = pair_analyze(omega, rho, Orientation<Quad>{rho.n, Quad(1)});
      rep = pair_report(pair);
      rep["metric"] = matrix_json(pair.metric);
    }
  }
  emit(opt, rep);
  return 0;
}

int cmd_classify(const Options& opt) {
  auto L = algebra_named<Quad>(opt.algebra);
  auto omega = load_form(opt.omega, 6);
  auto orb = classify_two_form(L, omega);
  json rep{{"type", orb.type},
           {"scale", scalar_to_string(orb.scale)},
           {"normalizer", matrix_json(orb.normalizer)},
           {"summand_swap", orb.summand_swap}};
  if (orb.type == 4) rep["beta"] = scalar_to_string(orb.beta);
  if (orb.type == 5) rep["subcase"] = orb.subcase;
  emit(opt, rep);
  return 0;
}

int cmd_halfflat_check(const Options& opt) {
  auto L = algebra_named<Quad>(opt.algebra);
  auto omega = load_form(opt.omega, 6);
  auto rho = load_form(opt.rho, 6);
  auto pair = pair_analyze(omega, rho, Orientation<Quad>{6, Quad(1)});
  json rep = pair_report(pair);
  bool drho = L.d(rho).is_zero_form();
  bool dsigma = L.d(wedge(omega, omega)).is_zero_form();
  rep["d_rho_zero"] = drho;
  rep["d_sigma_zero"] = dsigma;
  rep["half_flat"] = drho && dsigma && pair.normalized;
  emit(opt, rep);
  return 0;
}

int cmd_flow(const Options& opt) {
  auto L = algebra_named<double>(opt.algebra);
  auto omega = to_float(load_form(opt.omega, 6));
  auto rho = to_float(load_form(opt.rho, 6));
  FlowConfig cfg;
  cfg.h = opt.h;
  cfg.adaptive = opt.adaptive;
  if (opt.kind == "parallel") {
    cfg.kind = FlowKind::Parallel;
  } else if (opt.kind == "nearly") {
    cfg.kind = FlowKind::NearlyHalfFlat;
    cfg.lambda = opt.lambda;
  } else {
    throw std::runtime_error("--kind must be parallel or nearly");
  }
  auto s = flow_state(L, omega, rho, 0.0, cfg);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw std::runtime_error("cannot write " + opt.out);
    os = &file;
  }
  auto dump = [&](const FlowState& st) {
    json rec{{"t", st.t},
             {"rho", form_to_json(st.rho)},
             {"sigma", form_to_json(st.sigma)},
             {"drift",
              {{"d_rho", st.drift.d_rho},
               {"d_sigma", st.drift.d_sigma},
               {"compat", st.drift.compat},
               {"normalization", st.drift.normalization},
               {"nearly", st.drift.nearly}}}};
    (*os) << rec.dump() << "\n";
  };
  dump(s);
  evolve_to(L, s, opt.t_end, cfg, dump);
  return 0;
}

int cmd_kappa(const Options& opt) {
  auto L = algebra_named<Quad>(opt.algebra);
  auto rho = load_form(opt.rho, 6);
  auto ks = kappa_solution(L, family_params(rho));
  json coeffs = json::array();
  for (auto& c : ks.kappa.c) coeffs.push_back(scalar_to_string(c));
  json rep{{"kappa_coefficients_ascending", coeffs},
           {"epsilon", ks.epsilon},
           {"interval_exact", ks.interval_exact}};
  rep["interval"] = {
      {"x_minus", ks.x_minus ? scalar_to_string(*ks.x_minus)
                             : (std::isfinite(ks.xm) ? scalar_to_string(ks.xm) : "-inf")},
      {"x_plus", ks.x_plus ? scalar_to_string(*ks.x_plus)
                           : (std::isfinite(ks.xp) ? scalar_to_string(ks.xp) : "+inf")}};
  if (ks.interval_exact && (ks.x_minus || ks.x_plus)) {
    // factored display where the endpoint roots were certified exactly
    Poly<Quad> q = ks.kappa;
    std::string factored;
    for (auto r : {ks.x_minus, ks.x_plus}) {
      if (!r) continue;
      int mult = deflate_root(q, *r);
      std::string root = scalar_to_string(*r);
      std::string factor = "(x - (" + root + "))";
      if (mult > 1) factor += "^" + std::to_string(mult);
      if (mult > 0) factored += factor;
    }
    if (!q.is_zero_poly() && q.degree() == 0) {
      if (!(q.c[0] == Quad(1))) factored = scalar_to_string(q.c[0]) + " * " + factored;
    } else if (!q.is_zero_poly()) {
      std::string rest;
      for (int i = q.degree(); i >= 0; --i) {
        if (is_zero(q.c[size_t(i)])) continue;
        if (!rest.empty()) rest += " + ";
        rest += scalar_to_string(q.c[size_t(i)]);
        if (i) rest += "*x^" + std::to_string(i);
      }
      factored += " * (" + rest + ")";
    }
    rep["kappa_factored"] = factored;
  }
  emit(opt, rep);
  return 0;
}

int cmd_curvature(const Options& opt) {
  CurvatureOptions copt;
  copt.fd_step = opt.fd_step;
  copt.tol = opt.tol;
  ChartMetric cm;
  if (opt.seven) {
    auto L = algebra_named<Quad>(opt.algebra);
    auto rho = load_form(opt.rho, 6);
    cm = chart_from_kappa(kappa_solution(L, family_params(rho)));
  } else {
    auto omega = load_form(opt.omega, 6);
    auto rho = load_form(opt.rho, 6);
    auto pair = pair_analyze(omega, rho, Orientation<Quad>{6, Quad(1)});
    cm = chart_from_pair(to_float(pair.metric));
  }
  std::vector<CurvatureReport> reps;
  auto verdict = certify(cm, sample_points(cm.dim, opt.points), copt, &reps);
  json out{{"verdict", verdict}, {"chart", cm.chart_info}};
  json arr = json::array();
  for (const auto& r : reps) {
    json svals = json::array();
    for (size_t i = 0; i < std::min<size_t>(r.svals.size(), 21); ++i) svals.push_back(r.svals[i]);
    arr.push_back({{"point", r.point},
                   {"rank", r.op_rank},
                   {"gap_ratio", r.gap_ratio},
                   {"ricci_norm", r.ricci_norm},
                   {"bianchi_residual", r.bianchi_residual},
                   {"parallel_residual", r.parallel_residual},
                   {"verdict", r.verdict},
                   {"singular_values", svals}});
  }
  out["points"] = arr;
  emit(opt, out);
  return 0;
}

int cmd_signature(const Options& opt) {
  json rep;
  if (opt.signature_case == "para") {
    auto cone = para_cone_base_point();
    rep = {{"group", "SL(6,R) para"},
           {"basePoint", "u123"},
           {"gamma_pp", rat_to_string(cone.gamma_pp)},
           {"omega_vanishes_on_tangent", cone.omega_vanishes_on_tangent},
           {"lambda_of_re_u123", rat_to_string(cone.lambda)}};
  } else {
    auto r = orbit_signature(opt.signature_case);
    rep = {{"group", r.group},
           {"basePoint", r.base_point},
           {"tangentSignature", inertia_json(r.tangent)},
           {"projectiveSignature", inertia_json(r.projective)}};
  }
  emit(opt, rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable-form calculus, Hitchin-type flows and holonomy certification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra, "Lie algebra name or Salamon string");
    sub->add_option("--mode", opt.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", opt.tol, "float-mode tolerance");
    sub->add_option("--out", opt.out, "output file (default stdout)");
  };

  auto* analyze = app.add_subcommand("analyze", "invariants of a three-form or a pair");
  analyze->add_option("--rho", opt.rho, "three-form literal or @file.json")->required();
  analyze->add_option("--omega", opt.omega, "two-form for pair analysis");
  add_common(analyze);

  auto* classify = app.add_subcommand("classify", "two-form orbit type on h3+h3");
  classify->add_option("--omega", opt.omega)->required();
  add_common(classify);

  auto* hf = app.add_subcommand("halfflat-check", "half-flatness and normalisation report");
  hf->add_option("--omega", opt.omega)->required();
  hf->add_option("--rho", opt.rho)->required();
  add_common(hf);

  auto* flow = app.add_subcommand("flow", "integrate the evolution equations (JSONL trajectory)");
  flow->add_option("--omega", opt.omega)->required();
  flow->add_option("--rho", opt.rho)->required();
  flow->add_option("--kind", opt.kind, "parallel | nearly");
  flow->add_option("--lambda", opt.lambda, "nearly half-flat constant");
  flow->add_option("--step", opt.h, "step size");
  flow->add_option("--t-end", opt.t_end, "final time");
  flow->add_flag("--adaptive", opt.adaptive, "RK45 step control");
  add_common(flow);

  auto* kappa = app.add_subcommand("kappa", "kappa polynomial and interval of an omega_1 family");
  kappa->add_option("--rho", opt.rho, "closed three-form compatible with e1f1+e2f2+e3f3")
      ->required();
  add_common(kappa);

  auto* curv = app.add_subcommand("curvature", "finite-difference curvature reports");
  curv->add_option("--omega", opt.omega, "pair two-form (six-dimensional chart)");
  curv->add_option("--rho", opt.rho)->required();
  curv->add_flag("--seven", opt.seven, "seven-dimensional kappa-family metric");
  curv->add_option("--points", opt.points, "number of sample points");
  curv->add_option("--fd-step", opt.fd_step, "finite-difference step");
  add_common(curv);

  auto* sig = app.add_subcommand("signature", "special Kaehler orbit signatures");
  sig->add_option("--case", opt.signature_case,
                  "sl6r-e123 | su33-e123 | su33-e12f1 | su51-e123 | para")
      ->required();
  add_common(sig);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems count as I/O-level errors
  }

  try {
    if (*analyze) return cmd_analyze(opt);
    if (*classify) return cmd_classify(opt);
    if (*hf) return cmd_halfflat_check(opt);
    if (*flow) return cmd_flow(opt);
    if (*kappa) return cmd_kappa(opt);
    if (*curv) return cmd_curvature(opt);
    if (*sig) return cmd_signature(opt);
  } catch (const MathError& e) {
    json err{{"error", err_name(e.code())}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", "io"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
  return 1;
}
