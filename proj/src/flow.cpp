#include "hitchinlab/flow.hpp"

#include <cmath>

namespace hlab {

namespace {

Orientation<double> orient(int sign) { return Orientation<double>{6, double(sign)}; }

std::pair<KForm<double>, KForm<double>> flow_derivative(const LieAlgebraCE<double>& L,
                                                        const KForm<double>& rho,
                                                        const KForm<double>& sigma,
                                                        const FlowConfig& cfg, int osign) {
  Orientation<double> o = orient(osign);
  KForm<double> omega = sqrt_four_form(sigma, o);
  auto cls = j_and_dual(rho, o);
  KForm<double> drho = L.d(omega);
  if (cfg.kind == FlowKind::NearlyHalfFlat) drho = drho + cls.dual * cfg.lambda;
  return {drho, L.d(cls.dual)};
}

void update_drift(const LieAlgebraCE<double>& L, FlowState& s, const FlowConfig& cfg) {
  Orientation<double> o = orient(s.orientation);
  s.omega = sqrt_four_form(s.sigma, o);
  s.drift.d_rho = L.d(s.rho).max_abs();
  s.drift.d_sigma = L.d(s.sigma).max_abs();
  s.drift.compat = wedge(s.omega, s.rho).max_abs();
  auto cls = j_and_dual(s.rho, o);
  KForm<double> w3 = wedge(s.omega, wedge(s.omega, s.omega));
  s.drift.normalization =
      std::fabs(top_coeff(wedge(cls.dual, s.rho)) - 2.0 / 3.0 * top_coeff(w3));
  if (cfg.kind == FlowKind::NearlyHalfFlat)
    s.drift.nearly = (L.d(s.rho) - s.sigma * cfg.lambda).max_abs();
}

}  // namespace

FlowState flow_state(const LieAlgebraCE<double>& L, const KForm<double>& omega,
                     const KForm<double>& rho, double t0, const FlowConfig& cfg) {
  FlowState s;
  s.t = t0;
  s.rho = rho;
  s.omega = omega;
  s.sigma = wedge(omega, omega) * 0.5;
  double w3 = top_coeff(wedge(omega, s.sigma)) * 2;  // omega^3
  if (std::fabs(w3) < 1e-14) fail(Err::Degenerate, "flow_state: omega^3 ~ 0");
  s.orientation = w3 > 0 ? 1 : -1;
  Orientation<double> o = orient(s.orientation);
  s.lambda0 = std::fabs(to_double(lambda3(rho, o)));
  s.phi_omega0 = std::fabs(w3) / 6;
  if (cfg.kind == FlowKind::NearlyHalfFlat) {
    if (cfg.lambda == 0) fail(Err::NotNearlyHalfFlat, "nearly flow needs lambda != 0");
    double res = (L.d(rho) - s.sigma * cfg.lambda).max_abs();
    if (res > 1e-6 * (1 + s.sigma.max_abs()))
      fail(Err::NotNearlyHalfFlat, "flow_state: d rho != lambda sigma at t0");
  }
  update_drift(L, s, cfg);
  // the initial pair must be compatible and normalised within the tolerance
  double gate = std::max(cfg.drift_tolerance, 1e-12) * (1 + rho.max_abs());
  if (s.drift.compat > gate) fail(Err::Incompatible, "flow_state: omega ^ rho != 0 at t0");
  if (s.drift.normalization > gate) fail(Err::NotNormalized, "flow_state: pair not normalised at t0");
  return s;
}

FlowState rk4_step(const LieAlgebraCE<double>& L, const FlowState& s, double h,
                   const FlowConfig& cfg) {
  auto add = [](const KForm<double>& a, const KForm<double>& b, double f) {
    KForm<double> r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += f * b.c[i];
    return r;
  };
  auto [k1r, k1s] = flow_derivative(L, s.rho, s.sigma, cfg, s.orientation);
  auto [k2r, k2s] =
      flow_derivative(L, add(s.rho, k1r, h / 2), add(s.sigma, k1s, h / 2), cfg, s.orientation);
  auto [k3r, k3s] =
      flow_derivative(L, add(s.rho, k2r, h / 2), add(s.sigma, k2s, h / 2), cfg, s.orientation);
  auto [k4r, k4s] =
      flow_derivative(L, add(s.rho, k3r, h), add(s.sigma, k3s, h), cfg, s.orientation);
  FlowState out = s;
  out.t = s.t + h;
  for (size_t i = 0; i < s.rho.c.size(); ++i)
    out.rho.c[i] = s.rho.c[i] + h / 6 * (k1r.c[i] + 2 * k2r.c[i] + 2 * k3r.c[i] + k4r.c[i]);
  for (size_t i = 0; i < s.sigma.c.size(); ++i)
    out.sigma.c[i] = s.sigma.c[i] + h / 6 * (k1s.c[i] + 2 * k2s.c[i] + 2 * k3s.c[i] + k4s.c[i]);
  update_drift(L, out, cfg);
  return out;
}

namespace {

struct Rk45Result {
  FlowState state;
  double err = 0;
};

// Dormand-Prince 5(4) on the flattened (rho, sigma) vector.
Rk45Result rk45_attempt(const LieAlgebraCE<double>& L, const FlowState& s, double h,
                        const FlowConfig& cfg) {
  static const double A[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static const double B5[7] = {35.0 / 384,      0,        500.0 / 1113, 125.0 / 192,
                               -2187.0 / 6784, 11.0 / 84, 0};
  static const double B4[7] = {5179.0 / 57600,    0,            7571.0 / 16695, 393.0 / 640,
                               -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};
  int nr = int(s.rho.c.size()), ns = int(s.sigma.c.size());
  auto deriv = [&](const std::vector<double>& y) {
    KForm<double> r(6, 3), g(6, 4);
    for (int i = 0; i < nr; ++i) r.c[i] = y[i];
    for (int i = 0; i < ns; ++i) g.c[i] = y[nr + i];
    auto [dr, dg] = flow_derivative(L, r, g, cfg, s.orientation);
    std::vector<double> out(nr + ns);
    for (int i = 0; i < nr; ++i) out[i] = dr.c[i];
    for (int i = 0; i < ns; ++i) out[nr + i] = dg.c[i];
    return out;
  };
  std::vector<double> y0(nr + ns);
  for (int i = 0; i < nr; ++i) y0[i] = s.rho.c[i];
  for (int i = 0; i < ns; ++i) y0[nr + i] = s.sigma.c[i];
  std::vector<std::vector<double>> k(7);
  for (int stage = 0; stage < 7; ++stage) {
    std::vector<double> y = y0;
    for (int p = 0; p < stage; ++p)
      if (A[stage][p] != 0)
        for (size_t i = 0; i < y.size(); ++i) y[i] += h * A[stage][p] * k[p][i];
    k[stage] = deriv(y);
  }
  std::vector<double> y5 = y0, y4 = y0;
  for (int stage = 0; stage < 7; ++stage)
    for (size_t i = 0; i < y0.size(); ++i) {
      y5[i] += h * B5[stage] * k[stage][i];
      y4[i] += h * B4[stage] * k[stage][i];
    }
  double err = 0, scale = 1;
  for (size_t i = 0; i < y0.size(); ++i) {
    err = std::max(err, std::fabs(y5[i] - y4[i]));
    scale = std::max(scale, std::fabs(y0[i]));
  }
  Rk45Result out{s, err / scale};
  out.state.t = s.t + h;
  for (int i = 0; i < nr; ++i) out.state.rho.c[i] = y5[i];
  for (int i = 0; i < ns; ++i) out.state.sigma.c[i] = y5[nr + i];
  return out;
}

}  // namespace

FlowState evolve_to(const LieAlgebraCE<double>& L, FlowState s, double t_target,
                    const FlowConfig& cfg, const std::function<void(const FlowState&)>& sink) {
  double dir = t_target >= s.t ? 1 : -1;
  double h = cfg.h * dir;
  while (dir * (t_target - s.t) > 1e-15) {
    double hstep = dir * std::min(std::fabs(h), dir * (t_target - s.t));
    FlowState next = s;
    if (cfg.adaptive) {
      while (true) {
        auto att = rk45_attempt(L, s, hstep, cfg);
        if (att.err <= cfg.rk45_tol || std::fabs(hstep) <= cfg.min_h) {
          next = att.state;
          double fac = att.err > 0 ? 0.9 * std::pow(cfg.rk45_tol / att.err, 0.2) : 5.0;
          h = hstep * std::clamp(fac, 0.2, 5.0);
          break;
        }
        hstep *= 0.5;
        if (std::fabs(hstep) < cfg.min_h) hstep = cfg.min_h * dir;
      }
      update_drift(L, next, cfg);
    } else {
      next = rk4_step(L, s, hstep, cfg);
    }
    Orientation<double> o = orient(next.orientation);
    double lam = std::fabs(to_double(lambda3(next.rho, o)));
    double w3 = std::fabs(top_coeff(wedge(next.omega, wedge(next.omega, next.omega)))) / 6;
    if (lam < cfg.singular_guard * next.lambda0 || w3 < cfg.singular_guard * next.phi_omega0)
      fail(Err::SingularHit, "flow: lambda or phi(omega) collapsed");
    s = next;
    if (sink) sink(s);
  }
  return s;
}

// ---- kappa families ----

template <class S>
KappaSolution<S> kappa_solution(const LieAlgebraCE<S>& L, const std::array<S, 9>& a) {
  if (L.name != "h3h3") fail(Err::WrongNormalForm, "kappa_solution: needs h3h3 standard basis");
  KappaSolution<S> ks;
  ks.a = a;
  // The family parameter follows the display orientation of the printed
  // kappa polynomials and metrics: rho(x) = rho0 + x (e3 f12 - e12 f3).
  // The flow direction rho_dot = d omega points along -delta, so x decreases
  // along the evolution; kappa_time_of_x carries the matching sign.
  ks.delta = KForm<S>(6, 3);
  ks.delta.at_mask(0b011100) = scalar_traits<S>::from_int(1);   // e3 f12
  ks.delta.at_mask(0b100011) = -scalar_traits<S>::from_int(1);  // -e12 f3
  KForm<S> rho0 = rho1_family(a);
  if (!L.d(rho0).is_zero_form()) fail(Err::WrongNormalForm, "kappa_solution: rho0 not closed");
  Orientation<S> lex{6, scalar_traits<S>::from_int(1)};
  auto arr = lambda_poly(rho0, ks.delta, lex);
  ks.kappa = Poly<S>(std::vector<S>(arr.begin(), arr.end()));
  S k0 = ks.kappa.eval(scalar_traits<S>::from_int(0));
  ks.epsilon = sgn(k0);
  if (ks.epsilon == 0) fail(Err::NotStable, "kappa_solution: rho0 not stable");
  S want = scalar_traits<S>::from_int(4 * ks.epsilon);
  bool normalized;
  if constexpr (scalar_traits<S>::exact)
    normalized = (k0 == want);
  else
    normalized = std::fabs(to_double(k0) - to_double(want)) < 1e-9;
  if (!normalized) fail(Err::NotNormalized, "kappa_solution: kappa(0) != 4 eps");

  std::vector<double> coeffs;
  for (const auto& c : ks.kappa.c) coeffs.push_back(to_double(c));
  auto roots = real_roots(coeffs);
  ks.xm = -std::numeric_limits<double>::infinity();
  ks.xp = std::numeric_limits<double>::infinity();
  for (double r : roots) {
    if (r < 0) ks.xm = std::max(ks.xm, r);
    if (r > 0) ks.xp = std::min(ks.xp, r);
  }
  if constexpr (scalar_traits<S>::exact) {
    // snap float endpoints to field elements (all small continued-fraction
    // convergents are candidates; exact evaluation is the gate, so loose
    // float roots from multiple zeros are fine), then certify with Sturm.
    auto convergents = [](double v) {
      std::vector<Rational> out;
      double x = v;
      long p0 = 1, q0 = 0, p1 = long(std::floor(x)), q1 = 1;
      out.push_back(ratq(p1, q1));
      for (int it = 0; it < 24 && q1 <= 100000; ++it) {
        double frac = x - std::floor(x);
        if (frac < 1e-12) break;
        x = 1 / frac;
        long ai = long(std::floor(x));
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        out.push_back(ratq(p1, q1));
      }
      return out;
    };
    auto snap = [&](double r) -> std::optional<S> {
      std::vector<S> cands;
      for (auto& p : convergents(r)) cands.push_back(S(p));
      if constexpr (std::is_same_v<S, Quad>) {
        long d = 2;
        for (const auto& c : ks.kappa.c)
          if (c.b != 0) d = c.d;
        for (auto& p : convergents(r / std::sqrt(double(d))))
          cands.push_back(Quad(Rational(0), p, d));
      }
      for (auto& c : cands)
        if (is_zero(ks.kappa.eval(c))) return c;
      return std::nullopt;
    };
    bool ok_m = !std::isfinite(ks.xm), ok_p = !std::isfinite(ks.xp);
    if (std::isfinite(ks.xm))
      if (auto sm = snap(ks.xm)) ks.x_minus = sm, ok_m = true;
    if (std::isfinite(ks.xp))
      if (auto sp = snap(ks.xp)) ks.x_plus = sp, ok_p = true;
    if (ok_m && ok_p) {
      if (!ks.x_minus && !ks.x_plus) {
        ks.interval_exact = (count_real_roots(ks.kappa) == 0);
      } else {
        // deflate the endpoint roots, then certify there is nothing inside
        Poly<S> q = ks.kappa;
        if (ks.x_minus) deflate_root(q, *ks.x_minus);
        if (ks.x_plus) deflate_root(q, *ks.x_plus);
        if (q.degree() <= 0) {
          ks.interval_exact = true;
        } else if (ks.x_minus && ks.x_plus) {
          ks.interval_exact = (count_roots(q, *ks.x_minus, *ks.x_plus) == 0);
        } else {
          // one-sided: count over a generous bounded window on the open side
          S lo = ks.x_minus ? *ks.x_minus : S(scalar_traits<S>::from_int(-1000000));
          S hi = ks.x_plus ? *ks.x_plus : S(scalar_traits<S>::from_int(1000000));
          ks.interval_exact = (count_roots(q, lo, hi) == 0);
        }
      }
    }
  }
  return ks;
}

template KappaSolution<Rational> kappa_solution<Rational>(const LieAlgebraCE<Rational>&,
                                                          const std::array<Rational, 9>&);
template KappaSolution<Quad> kappa_solution<Quad>(const LieAlgebraCE<Quad>&,
                                                  const std::array<Quad, 9>&);

namespace {
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fb,
               double fm, double tol, int depth) {
  double m = (a + b) / 2;
  double flm = f((a + m) / 2), frm = f((m + b) / 2);
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, fm, flm, tol / 2, depth - 1) +
         simpson(f, m, b, fm, fb, frm, tol / 2, depth - 1);
}
}  // namespace

double kappa_time_of_x(const KappaSolution<Quad>& ks, double x) {
  std::vector<double> coeffs;
  for (const auto& c : ks.kappa.c) coeffs.push_back(to_double(c));
  auto integrand = [&](double u) {
    double k = 0;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) k = k * u + coeffs[i];
    double ek = ks.epsilon * k;
    return ek > 0 ? std::sqrt(ek) / 2 : 0.0;
  };
  if (x == 0) return 0;
  double a = std::min(0.0, x), b = std::max(0.0, x);
  double fa = integrand(a), fb = integrand(b), fm = integrand((a + b) / 2);
  double v = simpson(integrand, a, b, fa, fb, fm, 1e-13, 40);
  // x decreases along the flow: t > 0 corresponds to x < 0
  return x > 0 ? -v : v;
}

double kappa_x_of_time(const KappaSolution<Quad>& ks, double t) {
  if (t == 0) return 0;
  double hi = t > 0 ? ks.xm : ks.xp;  // x moves toward xm for positive times
  if (!std::isfinite(hi)) {
    hi = t > 0 ? -1.0 : 1.0;
    int guard = 0;
    while (std::fabs(kappa_time_of_x(ks, hi)) < std::fabs(t)) {
      hi *= 2;
      if (++guard > 60) fail(Err::OutsideInterval, "kappa_x_of_time: t unreachable");
    }
  } else if (std::fabs(kappa_time_of_x(ks, hi * (1 - 1e-12))) < std::fabs(t)) {
    fail(Err::OutsideInterval, "kappa_x_of_time: t beyond the interval");
  }
  double lo = 0;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    double tm = kappa_time_of_x(ks, mid);
    if (std::fabs(tm - t) < 1e-13) return mid;
    if (std::fabs(tm) < std::fabs(t))
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

// ---- nearly Kaehler fixtures and cone families ----

template <class S>
ConeFamily<S> cone_family(const LieAlgebraCE<S>& L, const KForm<S>& omega0, const KForm<S>& rho0,
                          double tol) {
  auto res = nk_residuals(L, omega0, rho0);
  bool ok;
  if constexpr (scalar_traits<S>::exact)
    ok = res.nk1.is_zero_form() && res.nk2.is_zero_form();
  else
    ok = res.nk1.max_abs() <= tol && res.nk2.max_abs() <= tol;
  if (!ok) fail(Err::NotNearlyKaehler, "cone_family: NK1/NK2 residuals nonzero");
  Orientation<S> o{6, top_coeff(wedge(omega0, wedge(omega0, omega0))) /
                          scalar_traits<S>::from_int(6)};
  return ConeFamily<S>{omega0, rho0, j_and_dual(rho0, o).dual};
}

template ConeFamily<Quad> cone_family<Quad>(const LieAlgebraCE<Quad>&, const KForm<Quad>&,
                                            const KForm<Quad>&, double);
template ConeFamily<double> cone_family<double>(const LieAlgebraCE<double>&, const KForm<double>&,
                                                const KForm<double>&, double);

KForm<double> CosineFamily::omega(double t) const {
  double c = eps < 0 ? std::cos(t) : std::cosh(t);
  return omega0 * (c * c);
}
KForm<double> CosineFamily::rho(double t) const {
  double c = eps < 0 ? std::cos(t) : std::cosh(t);
  double s = eps < 0 ? std::sin(t) : std::sinh(t);
  return (rho0 * s + rhohat0 * c) * (-c * c * c);
}
KForm<double> CosineFamily::rho_dot(double t) const {
  if (eps < 0) {
    double c = std::cos(t), s = std::sin(t);
    return rho0 * (3 * c * c * s * s - c * c * c * c) + rhohat0 * (4 * c * c * c * s);
  }
  double c = std::cosh(t), s = std::sinh(t);
  return rho0 * (-3 * c * c * s * s - c * c * c * c) + rhohat0 * (-4 * c * c * c * s);
}

CosineFamily cosine_cone_family(const LieAlgebraCE<double>& L, const KForm<double>& omega0,
                                const KForm<double>& rho0, double tol) {
  auto res = nk_residuals(L, omega0, rho0);
  if (res.nk1.max_abs() > tol || res.nk2.max_abs() > tol)
    fail(Err::NotNearlyKaehler, "cosine_cone_family: NK1/NK2 residuals nonzero");
  Orientation<double> o{6, top_coeff(wedge(omega0, wedge(omega0, omega0))) / 6};
  auto cls = j_and_dual(rho0, o);
  return CosineFamily{omega0, rho0, cls.dual, cls.epsilon};
}

KForm<double> dphi_product(const LieAlgebraCE<double>& L, const KForm<double>& omega,
                           const KForm<double>& rho, const KForm<double>& rho_dot) {
  KForm<double> drho7(7, 4), rest7(7, 3);
  KForm<double> drho = L.d(rho);
  KForm<double> rest = L.d(omega) - rho_dot;
  for (auto m : basis_masks(6, 4)) drho7.at_mask(m) = drho.at_mask(m);
  for (auto m : basis_masks(6, 3)) rest7.at_mask(m) = rest.at_mask(m);
  return drho7 + wedge(rest7, basis_form<double>(7, 1 << 6));
}

// ---- cocalibrated flow ----

CocalState cocal_state(const LieAlgebraCE<double>& L, const KForm<double>& phi0, double t0,
                       double tol) {
  auto st = g2_structure(phi0);
  CocalState s;
  s.t = t0;
  s.phi = phi0;
  s.psi = st.star_phi;
  s.cocal_residual = L.d(st.star_phi).max_abs();
  if (s.cocal_residual > tol * (1 + st.star_phi.max_abs()))
    fail(Err::NotCocalibrated, "cocal_state: d *phi phi != 0");
  return s;
}

KForm<double> cocal_recover(const KForm<double>& psi, const KForm<double>& phi_seed, double tol,
                            int max_iter) {
  KForm<double> phi = phi_seed;
  int n35 = int(phi.c.size());
  const double fd = 1e-6;
  auto residual = [&](const KForm<double>& p) { return g2_structure(p).star_phi - psi; };
  KForm<double> F = residual(phi);
  double fnorm = F.max_abs();
  for (int iter = 0; iter < max_iter && fnorm > tol * (1 + psi.max_abs()); ++iter) {
    Matrix<double> J(n35, n35);
    for (int j = 0; j < n35; ++j) {
      KForm<double> p = phi;
      p.c[j] += fd;
      KForm<double> Fj = residual(p);
      for (int i = 0; i < n35; ++i) J(i, j) = (Fj.c[i] - F.c[i]) / fd;
    }
    std::vector<double> rhs(n35);
    for (int i = 0; i < n35; ++i) rhs[i] = -F.c[i];
    std::vector<double> step = solve_lu(J, rhs);
    double damp = 1;
    for (int halvings = 0;; ++halvings) {
      KForm<double> trial = phi;
      for (int i = 0; i < n35; ++i) trial.c[i] += damp * step[i];
      KForm<double> Ft = residual(trial);
      if (Ft.max_abs() < fnorm || halvings >= 7) {
        phi = trial;
        F = Ft;
        fnorm = Ft.max_abs();
        break;
      }
      damp /= 2;
    }
  }
  if (fnorm > tol * (1 + psi.max_abs()))
    fail(Err::NewtonDiverged, "cocal_recover: residual " + std::to_string(fnorm));
  return phi;
}

CocalState cocal_rk4_step(const LieAlgebraCE<double>& L, const CocalState& s, double h) {
  auto add = [](const KForm<double>& a, const KForm<double>& b, double f) {
    KForm<double> r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += f * b.c[i];
    return r;
  };
  KForm<double> k1 = L.d(s.phi);
  KForm<double> phi2 = cocal_recover(add(s.psi, k1, h / 2), s.phi);
  KForm<double> k2 = L.d(phi2);
  KForm<double> phi3 = cocal_recover(add(s.psi, k2, h / 2), phi2);
  KForm<double> k3 = L.d(phi3);
  KForm<double> phi4 = cocal_recover(add(s.psi, k3, h), phi3);
  KForm<double> k4 = L.d(phi4);
  CocalState out = s;
  out.t = s.t + h;
  for (size_t i = 0; i < s.psi.c.size(); ++i)
    out.psi.c[i] = s.psi.c[i] + h / 6 * (k1.c[i] + 2 * k2.c[i] + 2 * k3.c[i] + k4.c[i]);
  out.phi = cocal_recover(out.psi, phi4);
  out.cocal_residual = L.d(g2_structure(out.phi).star_phi).max_abs();
  return out;
}

// Derived by solving NK1/NK2 over the scaling ansatz omega = a sum e^i f^i,
// rho = d(omega)/3 with de^i = c e^{jk}: the residuals vanish at c = 2,
// a = 2 sqrt3/9, all in Q(sqrt 3). nk_residuals of the result are exactly zero.
Su2Su2Fixture nearly_kaehler_su2su2() {
  Su2Su2Fixture fx;
  Quad c(Rational(2));
  std::vector<KForm<Quad>> d1(6, KForm<Quad>(6, 2));
  d1[0].at_mask(0b000110) = c;   // de^1 = 2 e^23
  d1[1].at_mask(0b000101) = -c;  // de^2 = 2 e^31
  d1[2].at_mask(0b000011) = c;   // de^3 = 2 e^12
  d1[3].at_mask(0b110000) = c;
  d1[4].at_mask(0b101000) = -c;
  d1[5].at_mask(0b011000) = c;
  fx.L = algebra_from_d1(std::move(d1), "su2su2");
  Quad a(Rational(0), Rational(2, 9), 3);  // 2 sqrt3 / 9
  fx.omega0 = KForm<Quad>(6, 2);
  fx.omega0.at_mask(0b001001) = a;
  fx.omega0.at_mask(0b010010) = a;
  fx.omega0.at_mask(0b100100) = a;
  fx.rho0 = fx.L.d(fx.omega0) * (Quad(1) / Quad(3));
  return fx;
}

}  // namespace hlab
