// Acceptance suite: one line per criterion, exit nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <random>

#include "hitchinlab/curvature.hpp"
#include "hitchinlab/flow.hpp"
#include "hitchinlab/io.hpp"
#include "hitchinlab/spkahler.hpp"

using namespace hlab;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  if (!ok) ++failures;
}

std::mt19937_64 rng(123456789);

Rational rnd_rat(int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return ratq(num(rng), den(rng));
}

const Orientation<Rational> lexr{6, Rational(1)};

std::array<Quad, 9> ex_params(int which) {
  Quad s(Rational(0), Rational(1, 2), 2);
  Quad r2 = Quad::sqrt_d(2);
  std::array<int, 9> c{};
  if (which == 1) c = {1, -1, -1, 1, 1, -1, 0, 1, 0};
  if (which == 2) c = {1, -1, -1, -1, 1, 1, 0, -1, 0};
  if (which == 3) c = {1, 1, 0, 0, 0, 0, 0, 0, 0};
  std::array<Quad, 9> a;
  for (int i = 0; i < 9; ++i) a[i] = Quad(Rational(c[i])) * (which == 3 ? r2 : s);
  return a;
}

std::array<double, 9> to_f(const std::array<Quad, 9>& a) {
  std::array<double, 9> r;
  for (int i = 0; i < 9; ++i) r[i] = to_double(a[i]);
  return r;
}

KForm<Rational> rho_eps(int eps) {
  KForm<Rational> rho(6, 3);
  rho.at_mask(0b010101) = 1;
  for (uint16_t m : {uint16_t(0b101001), uint16_t(0b100110), uint16_t(0b011010)})
    rho.at_mask(m) = Rational(eps);
  return rho;
}

KForm<Rational> omega_tau(int tau) {
  KForm<Rational> w(6, 2);
  w.at_mask(0b000011) = Rational(tau);
  w.at_mask(0b001100) = Rational(tau);
  w.at_mask(0b110000) = 1;
  return w;
}

// ---------- criterion 1 ----------
void criterion1() {
  auto poly = [](const std::array<Rational, 9>& v) -> Rational {
    const Rational &a1 = v[0], &a2 = v[1], &a3 = v[2], &a4 = v[3], &a5 = v[4], &a6 = v[5],
                   &a7 = v[6], &a8 = v[7], &a9 = v[8];
    return 2 * a6 * a4 * a8 * a8 + 2 * a1 * a2 * a8 * a8 + 2 * a8 * a8 * a3 * a5 -
           4 * a5 * a7 * a7 * a6 - 4 * a9 * a9 * a4 * a3 - 4 * a9 * a9 * a2 * a8 +
           4 * a7 * a7 * a8 * a1 + 4 * a7 * a8 * a8 * a9 + a1 * a1 * a2 * a2 + a6 * a6 * a4 * a4 +
           a3 * a3 * a5 * a5 + a8 * a8 * a8 * a8 - 2 * a6 * a4 * a3 * a5 + 4 * a5 * a7 * a9 * a3 +
           4 * a9 * a4 * a6 * a7 - 4 * a5 * a2 * a6 * a8 + 4 * a4 * a8 * a1 * a3 -
           4 * a9 * a2 * a1 * a7 - 2 * a1 * a2 * a6 * a4 - 2 * a1 * a2 * a3 * a5;
  };
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    std::array<Rational, 9> a;
    for (auto& x : a) x = rnd_rat();
    ok = ok && (lambda3(rho1_family(a), lexr) == poly(a));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && secs < 5.0;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "lambda oracle: 100 random tuples match the printed quartic exactly (%.2f s)",
                secs);
  report(1, ok, buf);
}

// ---------- criterion 2 ----------
void criterion2() {
  bool ok = true;
  auto rat = [](const char* l, int n) { return form_to_rational(parse_form(l, n)); };
  for (int eps : {1, -1}) {
    auto cls = j_and_dual(rho_eps(eps), lexr);
    ok = ok && (cls.lambda == Rational(4 * eps));
    for (int i : {0, 2, 4}) {
      for (int r = 0; r < 6; ++r) {
        ok = ok && (cls.J(r, i) == (r == i + 1 ? Rational(eps) : Rational(0)));
        ok = ok && (cls.J(r, i + 1) == (r == i ? Rational(1) : Rational(0)));
      }
    }
    auto expect =
        rat("e246", 6) + (rat("e235", 6) + rat("e145", 6) + rat("e136", 6)) * Rational(eps);
    ok = ok && (cls.dual == expect);
    ok = ok && (j_and_dual(cls.dual, lexr).dual == -rho_eps(eps));
  }
  for (auto [eps, tau] : {std::pair{-1, 1}, {-1, -1}, {1, 1}}) {
    auto pair = pair_analyze(omega_tau(tau), rho_eps(eps), lexr);
    auto g2 = lift_to_7(pair, Rational(1));
    int wantb[7] = {-eps * tau, tau, -eps * tau, tau, -eps, 1, 1};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        ok = ok && (g2.b(i, j) == (i == j ? Rational(wantb[i]) : Rational(0)));
    auto star = (rat("e3456", 7) + rat("e1256", 7)) * Rational(-eps * tau) +
                rat("e1234", 7) * Rational(-eps) + rat("e2467", 7) * Rational(eps) +
                rat("e2357", 7) + rat("e1457", 7) + rat("e1367", 7);
    ok = ok && (g2.star_phi == star);
    ok = ok && (g2.vol == Rational(-eps));
  }
  report(2, ok, "normal-form ledger: lambda, J actions, duals, *phi phi, b_phi, all exact");
}

// ---------- criterion 3 ----------
void criterion3() {
  auto L = h3h3<Quad>();
  Quad r2 = Quad::sqrt_d(2);
  Quad half(Rational(1, 2));
  Poly<Quad> lm({-r2, Quad(1)}), lp({r2, Quad(1)});
  bool ok = true;

  auto ks1 = kappa_solution(L, ex_params(1));
  ok = ok && (ks1.kappa == lm * lm * lm * lp) && ks1.interval_exact && ks1.x_minus &&
       ks1.x_plus && (*ks1.x_minus == -r2) && (*ks1.x_plus == r2);
  auto ks2 = kappa_solution(L, ex_params(2));
  ok = ok && (ks2.kappa == lm * lp * lp * lp) && ks2.interval_exact && ks2.x_minus &&
       ks2.x_plus && (*ks2.x_minus == -r2) && (*ks2.x_plus == r2);
  auto ks3 = kappa_solution(L, ex_params(3));
  Poly<Quad> q({Quad(2), Quad(0), Quad(1)});
  ok = ok && (ks3.kappa == q * q) && ks3.interval_exact && !ks3.x_minus && !ks3.x_plus;

  // printed g(x) components at x in {0, 1/2}, exact in Q(sqrt2)
  auto g_ex1 = [&](const Quad& x, const Quad& kap) {
    Matrix<Quad> g(6, 6);
    Quad f = Quad(1) - half * r2 * x;
    for (int i : {0, 1, 3, 4}) g(i, i) = f;
    g(2, 2) = g(5, 5) = f * Quad(-4) / kap;
    Quad cr = r2 * x * f * half;
    g(0, 3) = g(3, 0) = cr;
    g(1, 4) = g(4, 1) = cr;
    Quad cr3 = r2 * x * f * Quad(4) / kap * half;
    g(2, 5) = g(5, 2) = cr3;
    return g;
  };
  auto g_ex2 = [&](const Quad& x, const Quad& kap) {
    Matrix<Quad> g(6, 6);
    Quad f = Quad(1) + half * r2 * x;
    for (int i : {0, 3}) g(i, i) = f;
    for (int i : {1, 4}) g(i, i) = -f;
    g(2, 2) = g(5, 5) = f * Quad(4) / kap;
    Quad cr = -r2 * x * f * half;
    g(0, 3) = g(3, 0) = cr;
    g(1, 4) = g(4, 1) = cr;
    Quad cr3 = -r2 * x * f * Quad(4) / kap * half;
    g(2, 5) = g(5, 2) = cr3;
    return g;
  };
  auto g_ex3 = [&](const Quad& x, const Quad& kap) {
    Matrix<Quad> g(6, 6);
    Quad f = (Quad(2) + x * x) * half;
    g(0, 3) = g(3, 0) = f;
    g(1, 4) = g(4, 1) = f;
    Quad c36 = Quad(4) * (Quad(2) - x * x) / kap * half;
    g(2, 5) = g(5, 2) = c36;
    Quad d3 = Quad(4) * r2 * x / kap;
    g(2, 2) = d3;
    g(5, 5) = -d3;
    return g;
  };
  for (Quad x : {Quad(0), Quad(half)}) {
    ok = ok && (ks1.metric6(x) == g_ex1(x, ks1.kappa.eval(x)));
    ok = ok && (ks2.metric6(x) == g_ex2(x, ks2.kappa.eval(x)));
    ok = ok && (ks3.metric6(x) == g_ex3(x, ks3.kappa.eval(x)));
  }
  report(3, ok,
         "kappa families: exact polynomials, exact intervals, printed g(x) entries at x in {0,1/2}");
}

// ---------- criterion 4 ----------
void criterion4() {
  auto Lq = h3h3<Quad>();
  auto L = h3h3<double>();
  auto ks = kappa_solution(Lq, ex_params(1));
  KForm<double> om(6, 2);
  om.at_mask(0b001001) = 1;
  om.at_mask(0b010010) = 1;
  om.at_mask(0b100100) = 1;
  KForm<double> rho0 = rho1_family(to_f(ex_params(1)));
  FlowConfig cfg;
  cfg.h = 5e-4;  // the family stiffens toward |x| = 1.2; h^4 drift stays under 1e-8
  auto s0 = flow_state(L, om, rho0, 0.0, cfg);
  bool ok = true;
  double max_drift = 0, max_err = 0;
  for (double xt : {-1.2, -0.6, 0.6, 1.2}) {
    double t = kappa_time_of_x(ks, xt);
    double worst = 0;
    auto end = evolve_to(L, s0, t, cfg, [&](const FlowState& st) {
      worst = std::max(worst, st.drift.max());
    });
    max_drift = std::max(max_drift, worst);
    double x = kappa_x_of_time(ks, t);
    KForm<double> rho_cf = to_float(rho1_family(ex_params(1))) + to_float(ks.delta) * x;
    double kap = 0;
    for (int i = 4; i >= 0; --i) kap = kap * x + to_double(ks.kappa.c[size_t(i)]);
    double sq = std::sqrt(-kap) / 2;
    KForm<double> om_cf(6, 2);
    om_cf.at_mask(0b001001) = sq;
    om_cf.at_mask(0b010010) = sq;
    om_cf.at_mask(0b100100) = 1 / sq;
    KForm<double> sig_cf = wedge(om_cf, om_cf) * 0.5;
    max_err = std::max(max_err, (end.rho - rho_cf).max_abs());
    max_err = std::max(max_err, (end.sigma - sig_cf).max_abs());
  }
  ok = ok && max_err < 1e-6 && max_drift < 1e-8;
  // drift scales as h^4 within a factor of two
  double t_end = kappa_time_of_x(ks, -1.0);
  auto drift_at = [&](double h) {
    FlowConfig c2 = cfg;
    c2.h = h;
    double worst = 0;
    evolve_to(L, s0, t_end, c2, [&](const FlowState& st) {
      worst = std::max(worst, st.drift.compat + st.drift.normalization);
    });
    return worst;
  };
  double ratio = drift_at(4e-2) / drift_at(2e-2);
  ok = ok && ratio > 8.0 && ratio < 32.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "flow vs closed form: err %.2e (<1e-6), drift %.2e (<1e-8), h^4 ratio %.1f",
                max_err, max_drift, ratio);
  report(4, ok, buf);
}

// ---------- criterion 5 ----------
void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  auto L = h3h3<Quad>();
  bool ok = true;
  double worst_ric = 0, worst_gap = 1e300;
  for (int which : {1, 2, 3}) {
    auto ks = kappa_solution(L, ex_params(which));
    auto cm = chart_from_kappa(ks);
    CurvatureOptions opt;
    opt.want_nabla_r = false;
    std::vector<CurvatureReport> reps;
    auto verdict = certify(cm, sample_points(7, 5), opt, &reps);
    ok = ok && (verdict == "HolonomyFullG2kind");
    for (const auto& r : reps) {
      ok = ok && r.op_rank == 14 && r.gap_ratio >= 1e3 && r.ricci_norm < 1e-5;
      worst_ric = std::max(worst_ric, r.ricci_norm);
      worst_gap = std::min(worst_gap, r.gap_ratio);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && secs < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "holonomy: rank 14 at 15 points, gap >= %.1e, |Ric| <= %.1e (%.1f s < 60 s)",
                worst_gap, worst_ric, secs);
  report(5, ok, buf);
}

// ---------- criterion 6 ----------
void criterion6() {
  struct Ex {
    int type;
    const char* rho;
    bool quad;
  };
  // the four SU(1,2) and four SL(3,R) examples (omega_4 with beta = 1)
  // the omega_3 and omega_5 rows of the printed lists carry each other's
  // three-forms; paired correctly here (see the structure tests)
  const Ex su12[] = {{2, "e12f3+sqrt2 e13f2+e1f23+e23f1-e3f12+sqrt2 f123", true},
                     {3, "e12f3+e13f2-e1f23+e23f1-e3f12+f123", false},
                     {4, "e12f3-e13f2+e1f23+2*e23f1-1*e2f13-e3f12-3*f123", false},
                     {5, "e123+e12f3+e13f2+e1f12-2*e1f23+e2f13-e3f12", false}};
  const Ex sl3r[] = {{2, "sqrt2 e1f23 + sqrt2 e23f1", true},
                     {3, "sqrt2 e123 + sqrt2 f123", true},
                     {4, "2*e1f23-2*e12f3-2*e2f13+2*e3f12", false},
                     {5, "sqrt2 e12f3 + sqrt2 e13f2 + sqrt2 e1f12 - sqrt2 e3f12", true}};
  bool ok = true;
  auto Lq = h3h3<Quad>();
  auto L = h3h3<double>();
  double worst_comp = 0, worst_nabla = 0, worst_ric = 0, worst_traj = 0;
  for (const Ex* exs : {su12, sl3r}) {
    for (int i = 0; i < 4; ++i) {
      auto om = omega_normal_form<Quad>(exs[i].type, Quad(1));
      auto rho = parse_form(exs[i].rho);
      auto pair = pair_analyze(om, rho, Orientation<Quad>{6, Quad(1)});
      ok = ok && pair.normalized;
      auto cm = chart_from_pair(to_float(pair.metric));
      CurvatureOptions opt;
      std::vector<CurvatureReport> reps;
      auto verdict = certify(cm, sample_points(6, 3), opt, &reps);
      ok = ok && verdict == "SymmetricRank1";
      for (const auto& r : reps) {
        ok = ok && r.op_rank == 1 && r.ricci_norm < 1e-6 && r.parallel_residual < 1e-5;
        worst_nabla = std::max(worst_nabla, r.parallel_residual);
        worst_ric = std::max(worst_ric, r.ricci_norm);
        // endomorphism has a single nonzero column dx1 ^ dy1 -> c dx3 ^ dy3
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < 6; ++a)
          for (int b = a + 1; b < 6; ++b) pairs.emplace_back(a, b);
        Matrix<double> g = cm.eval(r.point);
        Matrix<double> g2(15, 15);
        for (int a = 0; a < 15; ++a)
          for (int b = 0; b < 15; ++b) {
            auto [x, y] = pairs[size_t(a)];
            auto [u, v] = pairs[size_t(b)];
            g2(a, b) = g(x, u) * g(y, v) - g(x, v) * g(y, u);
          }
        Matrix<double> endo = inverse(g2) * r.op;
        int col = -1, row = -1;
        for (int a = 0; a < 15; ++a) {
          if (pairs[size_t(a)] == std::make_pair(0, 3)) col = a;
          if (pairs[size_t(a)] == std::make_pair(2, 5)) row = a;
        }
        for (int a = 0; a < 15; ++a)
          for (int b = 0; b < 15; ++b)
            if (!(b == col && a == row))
              worst_comp = std::max(worst_comp, std::fabs(endo(a, b)));
      }
      // affine trajectory vs RK4 over t in [0, 10]
      auto sol = evolve_affine(Lq, om, rho);
      FlowConfig cfg;
      cfg.h = 2e-3;
      auto s = flow_state(L, to_float(om), to_float(rho), 0.0, cfg);
      auto end = evolve_to(L, s, 10.0, cfg);
      double err = std::max((end.rho - to_float(sol.rho(Quad(10)))).max_abs(),
                            (end.sigma - to_float(sol.sigma(Quad(10)))).max_abs());
      worst_traj = std::max(worst_traj, err);
      ok = ok && err < 1e-10;
    }
  }
  ok = ok && worst_comp < 1e-6;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "rigidity: off-component %.1e, |nabla R| %.1e, |Ric| %.1e, affine-vs-RK4 %.1e",
                worst_comp, worst_nabla, worst_ric, worst_traj);
  report(6, ok, buf);
}

// ---------- criterion 7 ----------
void criterion7() {
  auto fx = nearly_kaehler_su2su2();
  bool ok = fx.L.d_squared_zero();
  auto res = nk_residuals(fx.L, fx.omega0, fx.rho0);
  ok = ok && res.nk1.is_zero_form() && res.nk2.is_zero_form();
  // cone family: d phi = 0 and d *phi = 0, exactly, at exact sample times
  auto cone = cone_family(fx.L, fx.omega0, fx.rho0);
  KForm<Quad> e7 = basis_form<Quad>(7, 1 << 6);
  for (Quad t : {Quad(1), Quad(2), Quad(Rational(1, 2))}) {
    KForm<Quad> drho6 = fx.L.d(cone.rho(t));
    KForm<Quad> rest6 = fx.L.d(cone.omega(t)) - cone.rho_dot(t);
    KForm<Quad> drho7(7, 4), rest7(7, 3);
    for (auto m : basis_masks(6, 4)) drho7.at_mask(m) = drho6.at_mask(m);
    for (auto m : basis_masks(6, 3)) rest7.at_mask(m) = rest6.at_mask(m);
    ok = ok && (drho7 + wedge(rest7, e7)).is_zero_form();
    ok = ok && (fx.L.d(cone.rhohat(t)) - cone.sigma_dot(t)).is_zero_form();
    ok = ok && fx.L.d(cone.sigma(t)).is_zero_form();
  }
  // cosine cone: nearly parallel residual < 1e-10 at three times
  LieAlgebraCE<double> L;
  L.n = 6;
  for (auto& f : fx.L.d1) L.d1.push_back(to_float(f));
  auto om0 = to_float(fx.omega0);
  auto rho0 = to_float(fx.rho0);
  auto fam = cosine_cone_family(L, om0, rho0);
  double worst = 0;
  for (double t : {0.0, 0.3, 0.6}) {
    KForm<double> phi7(7, 3);
    auto om = fam.omega(t);
    auto rho = fam.rho(t);
    for (auto m : basis_masks(6, 3)) phi7.at_mask(m) = rho.at_mask(m);
    KForm<double> om7(7, 2);
    for (auto m : basis_masks(6, 2)) om7.at_mask(m) = om.at_mask(m);
    phi7 = phi7 + wedge(om7, basis_form<double>(7, 1 << 6));
    auto st = g2_structure(phi7);
    auto dphi = dphi_product(L, om, rho, fam.rho_dot(t));
    worst = std::max(worst, (dphi - st.star_phi * double(fam.mu())).max_abs());
  }
  ok = ok && worst < 1e-10;
  // nearly flow reproduces the cosine family to 1e-6
  FlowConfig cfg;
  cfg.kind = FlowKind::NearlyHalfFlat;
  cfg.lambda = -4;
  cfg.h = 5e-4;
  auto s = flow_state(L, fam.omega(0), fam.rho(0), 0.0, cfg);
  auto end = evolve_to(L, s, 0.6, cfg);
  double err = std::max((end.rho - fam.rho(0.6)).max_abs(), (end.omega - fam.omega(0.6)).max_abs());
  ok = ok && err < 1e-6;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "cone suite: exact closedness, |d phi - mu *phi| %.1e, nearly-flow err %.1e", worst,
                err);
  report(7, ok, buf);
}

// ---------- criterion 8 ----------
void criterion8() {
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  auto rat7 = [](const char* lit) { return to_float(form_to_rational(parse_form(lit, 7))); };
  bool ok = true;
  double worst = 0;
  for (int tau : {1, -1}) {
    auto phi0 = (rat7("e127") + rat7("e347")) * double(tau) + rat7("e567") + rat7("e135") -
                rat7("e146") - rat7("e236") - rat7("e245");
    for (int trial = 0; trial < 50; ++trial) {
      KForm<double> phi = phi0;
      for (auto& c : phi.c) c += u(rng);
      auto st = g2_structure(phi);
      KForm<double> seed = phi;
      for (auto& c : seed.c) c += u(rng) * 0.2;
      auto rec = cocal_recover(st.star_phi, seed);
      worst = std::max(worst, (rec - phi).max_abs());
    }
  }
  ok = ok && worst < 1e-10;

  // t^3 phi0 cone over the nearly parallel fixture: closed four-form
  auto fx = nearly_kaehler_su2su2();
  LieAlgebraCE<double> L6;
  L6.n = 6;
  for (auto& f : fx.L.d1) L6.d1.push_back(to_float(f));
  auto fam = cosine_cone_family(L6, to_float(fx.omega0), to_float(fx.rho0));
  LieAlgebraCE<double> L8;
  L8.n = 8;
  for (auto& f : fx.L.d1) {
    KForm<double> g(8, 2);
    auto ff = to_float(f);
    for (auto m : basis_masks(6, 2)) g.at_mask(m) = ff.at_mask(m);
    L8.d1.push_back(g);
  }
  L8.d1.push_back(KForm<double>(8, 2));
  L8.d1.push_back(KForm<double>(8, 2));
  auto phi7 = [&](double s) {
    KForm<double> p(8, 3);
    auto om = fam.omega(s);
    auto rho = fam.rho(s);
    for (auto m : basis_masks(6, 3)) p.at_mask(m) = -rho.at_mask(m);
    KForm<double> om8(8, 2);
    for (auto m : basis_masks(6, 2)) om8.at_mask(m) = om.at_mask(m);
    return p - wedge(om8, basis_form<double>(8, 1 << 6));
  };
  auto star7 = [&](double s) {
    KForm<double> p7(7, 3);
    auto p8 = phi7(s);
    for (auto m : basis_masks(7, 3)) p7.at_mask(m) = p8.at_mask(m);
    auto st = g2_structure(p7);
    KForm<double> out(8, 4);
    for (auto m : basis_masks(7, 4)) out.at_mask(m) = st.star_phi.at_mask(m);
    return out;
  };
  auto Phi = [&](double s, double t) {
    return wedge(basis_form<double>(8, 1 << 7), phi7(s) * (t * t * t)) + star7(s) * (t * t * t * t);
  };
  double s0 = 0.2, t0 = 1.3, hs = 1e-4, ht = 1e-4;
  auto rich = [](const KForm<double>& d1, const KForm<double>& d2) {
    return (d2 * (4.0 / 3.0)) - (d1 * (1.0 / 3.0));
  };
  auto dds1 = (Phi(s0 + hs, t0) - Phi(s0 - hs, t0)) * (1 / (2 * hs));
  auto dds2 = (Phi(s0 + hs / 2, t0) - Phi(s0 - hs / 2, t0)) * (1 / hs);
  auto ddt1 = (Phi(s0, t0 + ht) - Phi(s0, t0 - ht)) * (1 / (2 * ht));
  auto ddt2 = (Phi(s0, t0 + ht / 2) - Phi(s0, t0 - ht / 2)) * (1 / ht);
  auto total = L8.d(Phi(s0, t0)) + wedge(basis_form<double>(8, 1 << 6), rich(dds1, dds2)) +
               wedge(basis_form<double>(8, 1 << 7), rich(ddt1, ddt2));
  double closed = total.max_abs();
  ok = ok && closed < 1e-8;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "cocalibrated: Newton round trip %.1e (<1e-10), cone four-form residual %.1e",
                worst, closed);
  report(8, ok, buf);
}

// ---------- criterion 9 ----------
void criterion9() {
  bool ok = true;
  // gamma has signature (10,10) on all of Lambda^3 C^6 for (3,3)
  {
    auto sp = su_space(3, 3);
    std::vector<CForm> basis;
    for (auto m : basis_masks(6, 3)) basis.push_back(basis_form<CxR>(6, m, true));
    auto in = sp.restricted_signature(basis);
    ok = ok && in.pos == 10 && in.neg == 10;
  }
  auto r1 = orbit_signature("sl6r-e123");
  ok = ok && r1.tangent.pos == 4 && r1.tangent.neg == 6;
  auto r2 = orbit_signature("su33-e123");
  ok = ok && r2.tangent.pos == 1 && r2.tangent.neg == 9;
  auto r3 = orbit_signature("su33-e12f1");
  ok = ok && r3.tangent.pos == 5 && r3.tangent.neg == 5;
  auto r4 = orbit_signature("su51-e123");
  ok = ok && r4.tangent.pos == 7 && r4.tangent.neg == 3;
  ok = ok && su_space(3, 3).tau_square_sign() == 1 && su_space(5, 1).tau_square_sign() == 1 &&
       su_space(4, 2).tau_square_sign() == -1;
  // para case
  std::uniform_int_distribution<int> num(-3, 3);
  KForm<Rational> base(6, 3);
  base.at_mask(0b000111) = 1;
  base.at_mask(0b111000) = 1;
  for (int t = 0; t < 20 && ok; ++t) {
    Matrix<Rational> a(6, 6);
    do {
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a(i, j) = Rational(num(rng));
    } while (is_zero(determinant(a)));
    auto pt = para_structure(pullback(a, base));
    ok = ok && (pt.J * pt.J == Matrix<Rational>::identity(20));
  }
  auto cone = para_cone_base_point();
  ok = ok && cone.gamma_pp == Rational(1) && cone.omega_vanishes_on_tangent &&
       sgn(cone.lambda) > 0;
  report(9, ok,
         "special Kaehler: (10,10), restricted (4,6),(1,9),(5,5),(7,3), tau^2 signs, para J^2 = Id, "
         "gamma(u123,u123) = 1");
}

// ---------- criterion 10 ----------
void criterion10() {
  bool ok = true;
  // kernel lemma, 500 random closed stable forms per listed algebra
  for (const auto& s : trick17_algebras()) {
    auto L = algebra_from_string<Rational>(s);
    auto closed = nullspace(L.d_matrix(3));
    int done = 0;
    long guard = 0;
    while (done < 500 && ++guard < 6000) {
      KForm<Rational> rho(6, 3);
      for (const auto& v : closed) {
        Rational c = rnd_rat(3);
        for (size_t i = 0; i < rho.c.size(); ++i) rho.c[i] += c * v[i];
      }
      Matrix<Rational> K = k_endomorphism(rho);
      Rational tr(0);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) tr += K(i, j) * K(j, i);
      if (is_zero(tr)) continue;
      auto rep = trick17_check(L, rho);
      ok = ok && rep.in_lambda4_U && rep.J_invariant;
      ++done;
    }
    ok = ok && done == 500;
  }
  // dual interior identities on 200 random exact inputs
  {
    KForm<Rational> normal(6, 3);
    normal.at_mask(0b010101) = 1;
    normal.at_mask(0b101001) = 1;
    normal.at_mask(0b100110) = 1;
    normal.at_mask(0b011010) = 1;
    std::uniform_int_distribution<int> num(-3, 3);
    for (int t = 0; t < 200; ++t) {
      Matrix<Rational> a(6, 6);
      do {
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) a(i, j) = Rational(num(rng));
      } while (sgn(determinant(a)) <= 0);
      auto rho = pullback(a, normal);
      auto cls = j_and_dual(rho, lexr);
      for (int x = 0; x < 6; ++x)
        ok = ok &&
             (wedge(interior(x, cls.dual), rho) + wedge(cls.dual, interior(x, rho))).is_zero_form();
    }
  }
  // beta ^ phi rank 21 on 100 random stable phi
  {
    std::uniform_int_distribution<int> num(-2, 2);
    auto term = [&](int a, int b, int c) {
      return wedge(basis_form<Rational>(7, uint16_t(1) << (a % 7)),
                   wedge(basis_form<Rational>(7, uint16_t(1) << (b % 7)),
                         basis_form<Rational>(7, uint16_t(1) << (c % 7))));
    };
    for (int done = 0; done < 100; ++done) {
      KForm<Rational> phi = term(0, 1, 3) * Rational(done % 2 ? 1 : -1);
      for (int i = 1; i < 7; ++i) phi = phi + term(i, i + 1, i + 3);
      Matrix<Rational> a(7, 7);
      do {
        for (int i = 0; i < 7; ++i)
          for (int j = 0; j < 7; ++j) a(i, j) = Rational(num(rng));
      } while (is_zero(determinant(a)));
      ok = ok && (wedge_phi_rank2(pullback(a, phi)) == 21);
    }
  }
  report(10, ok, "property suites: kernel lemma x2000, dual identities x200, rank-21 x100, exact");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 10 acceptance criteria PASS\n");
  return 0;
}
