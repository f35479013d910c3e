// The three evolution equations on Lie algebras: the parallel flow
// (rho_dot, sigma_dot) = (d omega, d rho_hat), its nearly half-flat variant
// with the lambda rho_hat source term, and the cocalibrated flow of *phi phi
// in dimension seven. Closed-form solutions: the affine trajectories for
// omega(z,z) = 0 on h3+h3, the kappa-polynomial families for omega_1, and the
// (hyperbolic cosine) cone families over nearly epsilon-Kaehler structures.
#pragma once

#include <functional>
#include <optional>

#include "hitchinlab/liealg.hpp"
#include "hitchinlab/polynomial.hpp"
#include "hitchinlab/stable.hpp"

namespace hlab {

struct DriftLedger {
  double d_rho = 0;          // ||d rho||
  double d_sigma = 0;        // ||d sigma||
  double compat = 0;         // ||omega ^ rho||
  double normalization = 0;  // |J*rho ^ rho - (2/3) omega^3|
  double nearly = 0;         // ||d rho - lambda sigma|| (nearly flow only)
  double max() const {
    return std::max({d_rho, d_sigma, compat, normalization, nearly});
  }
};

enum class FlowKind { Parallel, NearlyHalfFlat, Cocalibrated };

struct FlowConfig {
  FlowKind kind = FlowKind::Parallel;
  double h = 1e-3;
  bool adaptive = false;         // RK45 with step control
  double rk45_tol = 1e-10;
  double min_h = 1e-8;           // adaptive step floor
  double drift_tolerance = 1e-8;
  double singular_guard = 1e-6;  // abort when lambda or phi(omega) shrinks below this fraction
  double lambda = 0;             // nearly half-flat constant (nonzero for that kind)
};

struct FlowState {
  double t = 0;
  KForm<double> rho;    // three-form
  KForm<double> sigma;  // four-form, sigma = omega^2/2
  KForm<double> omega;  // cached square root of sigma
  DriftLedger drift;
  int orientation = -1;  // sign of omega^3 relative to e^{1..6}, fixed at start
  double lambda0 = 0, phi_omega0 = 0;  // singular-guard reference scales
};

// Build the initial state from a pair; fixes the orientation from omega^3.
FlowState flow_state(const LieAlgebraCE<double>& L, const KForm<double>& omega,
                     const KForm<double>& rho, double t0, const FlowConfig& cfg);

// One fixed-size RK4 step of the parallel or nearly half-flat system.
FlowState rk4_step(const LieAlgebraCE<double>& L, const FlowState& s, double h,
                   const FlowConfig& cfg);

// Integrate to t_target (fixed steps, optional RK45 control and singular
// guard); calls sink after every accepted step when given.
FlowState evolve_to(const LieAlgebraCE<double>& L, FlowState s, double t_target,
                    const FlowConfig& cfg,
                    const std::function<void(const FlowState&)>& sink = nullptr);

// Affine-linear trajectories for omega^{kappa_1} = 0 on h3+h3:
// sigma(t) = sigma0 + t d(rho_hat0), rho(t) = rho0 + t d(omega0).
template <class S>
struct AffineSolution {
  KForm<S> omega0, rho0, sigma0, d_omega0, d_rhohat0;
  S lambda0;  // constant along the trajectory
  KForm<S> rho(const S& t) const { return rho0 + d_omega0 * t; }
  KForm<S> sigma(const S& t) const { return sigma0 + d_rhohat0 * t; }
};

template <class S>
AffineSolution<S> evolve_affine(const LieAlgebraCE<S>& L, const KForm<S>& omega0,
                                const KForm<S>& rho0) {
  if (!kappa1_zero(omega0)) fail(Err::WrongOrbit, "evolve_affine: omega(z,z) != 0");
  if (!L.d(rho0).is_zero_form()) fail(Err::NotClosed, "evolve_affine: d rho != 0");
  if (!wedge(omega0, rho0).is_zero_form()) fail(Err::Incompatible, "evolve_affine: omega ^ rho != 0");
  Orientation<S> o{6, top_coeff(wedge(omega0, wedge(omega0, omega0))) /
                          scalar_traits<S>::from_int(6)};
  auto cls = j_and_dual(rho0, o);
  AffineSolution<S> sol;
  sol.omega0 = omega0;
  sol.rho0 = rho0;
  sol.sigma0 = wedge(omega0, omega0) * (scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2));
  sol.d_omega0 = L.d(omega0);
  sol.d_rhohat0 = L.d(cls.dual);
  sol.lambda0 = cls.lambda;
  // the proof's two constancy assertions, checked at sample times
  for (int t : {1, 2, 3}) {
    S ts = scalar_traits<S>::from_int(t);
    KForm<S> rt = sol.rho(ts);
    if (!(lambda3(rt, o) == sol.lambda0))
      fail(Err::WrongOrbit, "evolve_affine: lambda(rho(t)) is not constant");
    auto clst = j_and_dual(rt, o);
    if (!(L.d(clst.dual) == sol.d_rhohat0))
      fail(Err::WrongOrbit, "evolve_affine: d rho_hat(t) is not constant");
  }
  return sol;
}

// kappa(x) = lambda(rho0 + x(e12 f3 - e3 f12)) for the omega_1 families.
template <class S>
struct KappaSolution {
  std::array<S, 9> a;
  Poly<S> kappa;  // ascending coefficients, degree 4, units (e^{123}f^{123})^{(x)2}
  int epsilon;
  std::optional<S> x_minus, x_plus;  // exact interval endpoints when representable
  bool interval_exact = false;       // endpoints certified by Sturm counting
  double xm = 0, xp = 0;             // float endpoints (inf when unbounded)

  KForm<S> delta;  // e12 f3 - e3 f12

  KForm<S> rho(const S& x) const {
    KForm<S> base = rho1_family(a);
    return base + delta * x;
  }
  // omega(x) = s (e1f1 + e2f2) + (1/s) e3f3 with s = sqrt(eps kappa(x))/2;
  // exact only when eps kappa(x) is a square in the field.
  KForm<S> omega(const S& x) const {
    S ek = eps_kappa(x);
    auto s2 = sqrt_maybe(ek);
    if (!s2) fail(Err::ExactSqrtUnavailable, "kappa family: sqrt(eps kappa) not in the field");
    S s = *s2 / scalar_traits<S>::from_int(2);
    KForm<S> w(6, 2);
    w.at_mask(0b001001) = s;
    w.at_mask(0b010010) = s;
    w.at_mask(0b100100) = scalar_traits<S>::from_int(1) / s;
    return w;
  }
  S eps_kappa(const S& x) const {
    S k = kappa.eval(x);
    if (epsilon < 0) k = -k;
    if (sgn(k) <= 0) fail(Err::OutsideInterval, "kappa family: eps kappa(x) <= 0");
    return k;
  }
  // induced metric g(x) without square roots:
  //   g = -(eps/2) W_A K - (2/kappa) W_B K, K = K_{rho(x)} in e^{1..6} units
  Matrix<S> metric6(const S& x) const {
    KForm<S> rx = rho(x);
    Matrix<S> K = k_endomorphism(rx);
    KForm<S> wa(6, 2), wb(6, 2);
    wa.at_mask(0b001001) = scalar_traits<S>::from_int(1);
    wa.at_mask(0b010010) = scalar_traits<S>::from_int(1);
    wb.at_mask(0b100100) = scalar_traits<S>::from_int(1);
    Matrix<S> WA = two_form_matrix(wa), WB = two_form_matrix(wb);
    S half = scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2);
    S eps = scalar_traits<S>::from_int(epsilon);
    S kap = kappa.eval(x);
    Matrix<S> g = (WA * K) * (-eps * half) + (WB * K) * (-scalar_traits<S>::from_int(2) / kap);
    return g;
  }
  // g_phi = g(x) - (1/4) kappa(x) dx^2 on coordinates (1..6, x)
  Matrix<S> metric7(const S& x) const {
    Matrix<S> g6 = metric6(x);
    Matrix<S> g(7, 7);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(i, j) = g6(i, j);
    g(6, 6) = -kappa.eval(x) / scalar_traits<S>::from_int(4);
    return g;
  }
};

template <class S>
KappaSolution<S> kappa_solution(const LieAlgebraCE<S>& L, const std::array<S, 9>& a);

// x(t) for the kappa family: dt = sqrt(eps kappa)/2 dx, t(0) = 0; quadrature
// by adaptive Simpson, inversion by monotone bisection.
double kappa_time_of_x(const KappaSolution<Quad>& ks, double x);
double kappa_x_of_time(const KappaSolution<Quad>& ks, double t);

// ---- nearly epsilon-Kaehler structures, cones, cosine cones ----

template <class S>
struct NKResiduals {
  KForm<S> nk1;  // d omega - 3 rho
  KForm<S> nk2;  // d rho_hat - 4 omega_hat
};

template <class S>
NKResiduals<S> nk_residuals(const LieAlgebraCE<S>& L, const KForm<S>& omega0,
                            const KForm<S>& rho0) {
  Orientation<S> o{6, top_coeff(wedge(omega0, wedge(omega0, omega0))) /
                          scalar_traits<S>::from_int(6)};
  auto cls = j_and_dual(rho0, o);
  NKResiduals<S> r{L.d(omega0) - rho0 * scalar_traits<S>::from_int(3),
                   L.d(cls.dual) - wedge(omega0, omega0) * scalar_traits<S>::from_int(2)};
  return r;
}

// The nearly Kaehler fixture on su(2)+su(2): structure constants and the pair,
// exact over Q(sqrt 3).
struct Su2Su2Fixture {
  LieAlgebraCE<Quad> L;
  KForm<Quad> omega0, rho0;
};
Su2Su2Fixture nearly_kaehler_su2su2();

// Cone family (omega, rho) = (t^2 omega0, t^3 rho0); requires NK1/NK2.
template <class S>
struct ConeFamily {
  KForm<S> omega0, rho0, rhohat0;
  KForm<S> omega(const S& t) const { return omega0 * (t * t); }
  KForm<S> rho(const S& t) const { return rho0 * (t * t * t); }
  KForm<S> rho_dot(const S& t) const { return rho0 * (t * t * scalar_traits<S>::from_int(3)); }
  KForm<S> sigma(const S& t) const {
    return wedge(omega0, omega0) * (t * t * t * t / scalar_traits<S>::from_int(2));
  }
  KForm<S> sigma_dot(const S& t) const {
    return wedge(omega0, omega0) * (t * t * t * scalar_traits<S>::from_int(2));
  }
  KForm<S> rhohat(const S& t) const { return rhohat0 * (t * t * t); }
};

template <class S>
ConeFamily<S> cone_family(const LieAlgebraCE<S>& L, const KForm<S>& omega0, const KForm<S>& rho0,
                          double tol = 0.0);

// Cosine cone (eps = -1): omega = cos^2 t omega0, rho = -cos^3 t (sin t rho0 + cos t rhohat0);
// hyperbolic variant (eps = +1) with cosh/sinh. Nearly parallel constant mu = 4 eps.
struct CosineFamily {
  KForm<double> omega0, rho0, rhohat0;
  int eps = -1;
  int mu() const { return 4 * eps; }
  KForm<double> omega(double t) const;
  KForm<double> rho(double t) const;
  KForm<double> rho_dot(double t) const;
};

CosineFamily cosine_cone_family(const LieAlgebraCE<double>& L, const KForm<double>& omega0,
                                const KForm<double>& rho0, double tol = 1e-9);

// d(omega ^ dt + rho) on the product algebra with e7 = dt:
//   d rho + (d omega - rho_dot) ^ e7
KForm<double> dphi_product(const LieAlgebraCE<double>& L, const KForm<double>& omega,
                           const KForm<double>& rho, const KForm<double>& rho_dot);

// ---- cocalibrated flow in dimension seven ----

struct CocalState {
  double t = 0;
  KForm<double> phi;  // stable three-form
  KForm<double> psi;  // *phi phi
  double cocal_residual = 0;  // ||d *phi phi||
};

CocalState cocal_state(const LieAlgebraCE<double>& L, const KForm<double>& phi0, double t0,
                       double tol = 1e-8);

// Newton recovery of phi from psi = *phi phi, seeded at phi_seed.
KForm<double> cocal_recover(const KForm<double>& psi, const KForm<double>& phi_seed,
                            double tol = 1e-12, int max_iter = 50);

// One RK4 step of (d/dt)(*phi phi) = d phi.
CocalState cocal_rk4_step(const LieAlgebraCE<double>& L, const CocalState& s, double h);

}  // namespace hlab
