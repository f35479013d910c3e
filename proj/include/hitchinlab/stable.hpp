// Stable forms in dimensions six and seven: the quartic invariant, the induced
// (para-)complex structure, dual forms, compatible pairs and their metrics,
// and the lifts between dimensions 6, 7 and 8.
#pragma once

#include <optional>
#include <string>

#include "hitchinlab/exterior.hpp"

namespace hlab {

// K_rho(e_j) = kappa((e_j |_ rho) ^ rho), columns are images; entries are in
// units of e^{1..6} (lexicographic top form).
template <class S>
Matrix<S> k_endomorphism(const KForm<S>& rho) {
  Orientation<S> lex{rho.n, scalar_traits<S>::from_int(1)};
  Matrix<S> k(rho.n, rho.n);
  for (int j = 0; j < rho.n; ++j) {
    KForm<S> w = kappa_dual(wedge(interior(j, rho), rho), lex);
    for (int i = 0; i < rho.n; ++i) k(i, j) = w.c[i];
  }
  return k;
}

// lambda(rho) = tr(K^2)/6, reported in units of (o's positive generator)^{(x)2}.
template <class S>
S lambda3(const KForm<S>& rho, const Orientation<S>& o) {
  Matrix<S> k = k_endomorphism(rho);
  S tr = scalar_traits<S>::from_int(0);
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j) tr += k(i, j) * k(j, i);
  return tr / (scalar_traits<S>::from_int(6) * o.top * o.top);
}

template <class S>
struct StableClass3D6 {
  S lambda;     // in nu^{(x)2} units
  int epsilon;  // sign of lambda
  Matrix<S> J;  // J^2 = epsilon id
  KForm<S> dual;
  S phi_vol;  // phi(rho) in nu units (positive)
};

// J_rho = K / phi(rho) and the dual rho_hat = J^* rho, both relative to o.
template <class S>
StableClass3D6<S> j_and_dual(const KForm<S>& rho, const Orientation<S>& o) {
  Matrix<S> k = k_endomorphism(rho);
  S tr = scalar_traits<S>::from_int(0);
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j) tr += k(i, j) * k(j, i);
  S lam = tr / (scalar_traits<S>::from_int(6) * o.top * o.top);
  int eps = sgn(lam);
  if (eps == 0) fail(Err::NotStable, "j_and_dual: lambda(rho) = 0");
  if constexpr (!scalar_traits<S>::exact) {
    if (std::fabs(to_double(lam)) < 1e-14) fail(Err::NotStable, "j_and_dual: lambda ~ 0");
  }
  S alam = eps < 0 ? -lam : lam;
  auto phi = sqrt_maybe(alam);
  if (!phi) fail(Err::ExactSqrtUnavailable, "j_and_dual: phi(rho) not exact in this field");
  S denom = o.top * (*phi);
  Matrix<S> J(rho.n, rho.n);
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j) J(i, j) = k(i, j) / denom;
  StableClass3D6<S> out{lam, eps, J, pullback(J, rho), *phi};
  return out;
}

template <class S>
struct Decomposition {
  bool complex_pair;     // true when lambda < 0: rho = alpha + conj(alpha)
  KForm<S> alpha, beta;  // lambda > 0: rho = alpha + beta, alpha ^ beta > 0
                         // lambda < 0: alpha = Re, beta = Im of the (3,0)-form rho/2 + i rho_hat/2
};

template <class S>
Decomposition<S> decompose(const KForm<S>& rho, const Orientation<S>& o) {
  auto cls = j_and_dual(rho, o);
  S half = scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2);
  if (cls.epsilon > 0)
    return {false, (rho + cls.dual) * half, (rho - cls.dual) * half};
  return {true, rho * half, cls.dual * half};
}

// Pluecker test: a 3-form f is decomposable iff (v |_ f) ^ f = 0 for all v.
template <class S>
bool is_decomposable3(const KForm<S>& f, double tol = 0.0) {
  for (int i = 0; i < f.n; ++i) {
    KForm<S> w = wedge(interior(i, f), f);
    if constexpr (scalar_traits<S>::exact) {
      if (!w.is_zero_form()) return false;
    } else {
      if (w.max_abs() > tol) return false;
    }
  }
  return true;
}

// lambda(rho + x delta) as a degree-4 polynomial in x (exact interpolation
// at x = -2..2). Coefficients ascending.
template <class S>
std::array<S, 5> lambda_poly(const KForm<S>& rho, const KForm<S>& delta, const Orientation<S>& o) {
  std::array<S, 5> val{};
  S xs[5];
  for (int t = -2; t <= 2; ++t) {
    KForm<S> r = rho + delta * scalar_traits<S>::from_int(t);
    val[t + 2] = lambda3(r, o);
    xs[t + 2] = scalar_traits<S>::from_int(t);
  }
  // Lagrange interpolation on 5 nodes
  std::array<S, 5> out{};
  for (int i = 0; i < 5; ++i) {
    // numerator polynomial prod_{j != i} (x - x_j), denominator prod (x_i - x_j)
    std::array<S, 5> num{};
    num[0] = scalar_traits<S>::from_int(1);
    int deg = 0;
    S den = scalar_traits<S>::from_int(1);
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      for (int d = deg; d >= 0; --d) {
        num[d + 1] += num[d];
        num[d] = num[d] * (-xs[j]);
      }
      ++deg;
      den *= xs[i] - xs[j];
    }
    for (int d = 0; d <= 4; ++d) out[d] += val[i] * num[d] / den;
  }
  return out;
}

struct PairOptions {
  double tol = kFloatTol;  // float-mode residual tolerance
};

template <class S>
struct StablePair {
  KForm<S> omega, rho;
  int epsilon = 0, tau = 0;
  S lambda;  // in o units
  Matrix<S> metric;
  Inertia signature;  // (spacelike, timelike)
  std::string label;
  bool normalized = false;
  S phi_rho, phi_omega;  // volumes in o units
  Matrix<S> J;
};

template <class S>
Matrix<S> two_form_matrix(const KForm<S>& w) {
  Matrix<S> m(w.n, w.n);
  const auto& masks = basis_masks(w.n, 2);
  for (size_t t = 0; t < masks.size(); ++t) {
    int i = -1, j = -1;
    for (int b = 0; b < w.n; ++b)
      if (masks[t] >> b & 1) (i < 0 ? i : j) = b;
    m(i, j) = w.c[t];
    m(j, i) = -w.c[t];
  }
  return m;
}

inline std::string pair_label(int eps, const Inertia& sig) {
  if (eps < 0 && sig.pos == 6 && sig.neg == 0) return "SU(3)";
  if (eps < 0 && sig.pos == 2 && sig.neg == 4) return "SU(1,2)";
  if (eps > 0 && sig.pos == 3 && sig.neg == 3) return "SL(3,R)";
  return "unknown";
}

// Analyze a compatible pair. The epsilon-complex structure, the metric
// g = eps w(., J .) and its signature are computed in the orientation with
// w^3 > 0 (the one the construction of the pair metric singles out); the
// supplied orientation only fixes the units of the reported volumes.
template <class S>
StablePair<S> pair_analyze(const KForm<S>& omega, const KForm<S>& rho, const Orientation<S>& o,
                           const PairOptions& opt = {}) {
  KForm<S> w3 = wedge(omega, wedge(omega, omega));
  S w3top = top_coeff(w3);
  if (is_zero(w3top)) fail(Err::Degenerate, "pair_analyze: omega^3 = 0");
  if constexpr (!scalar_traits<S>::exact) {
    if (std::fabs(to_double(w3top)) < opt.tol) fail(Err::Degenerate, "pair_analyze: omega^3 ~ 0");
  }
  Orientation<S> o_omega{omega.n, w3top / scalar_traits<S>::from_int(6)};

  KForm<S> compat = wedge(omega, rho);
  bool ok = scalar_traits<S>::exact ? compat.is_zero_form()
                                    : compat.max_abs() <= opt.tol * (1 + rho.max_abs());
  if (!ok) fail(Err::Incompatible, "pair_analyze: omega ^ rho != 0");

  auto cls = j_and_dual(rho, o_omega);
  StablePair<S> out;
  out.omega = omega;
  out.rho = rho;
  out.epsilon = cls.epsilon;
  out.J = cls.J;
  out.lambda = lambda3(rho, o);

  Matrix<S> W = two_form_matrix(omega);
  Matrix<S> g = W * cls.J;
  if (cls.epsilon < 0) g = g * scalar_traits<S>::from_int(-1);
  out.metric = g;
  if constexpr (scalar_traits<S>::exact)
    out.signature = inertia_sym(g);
  else
    out.signature = inertia_sym_float(to_float(g), 1e-7);
  out.label = pair_label(out.epsilon, out.signature);
  out.tau = out.label == "SU(1,2)" ? -1 : 1;

  // normalisation: J^* rho ^ rho = (2/3) omega^3, checked without square roots
  KForm<S> lhs = wedge(cls.dual, rho);
  KForm<S> rhs = w3 * (scalar_traits<S>::from_int(2) / scalar_traits<S>::from_int(3));
  if constexpr (scalar_traits<S>::exact)
    out.normalized = (lhs == rhs);
  else
    out.normalized = (lhs - rhs).max_abs() <= opt.tol * (1 + rhs.max_abs());

  // phi(omega) = omega^3/6, phi(rho) positively oriented in the omega
  // orientation; both reported in units of o's generator.
  out.phi_omega = o_omega.top / o.top;
  out.phi_rho = cls.phi_vol * o_omega.top / o.top;
  return out;
}

template <class S>
struct G2Structure {
  KForm<S> phi;
  Matrix<S> b;    // b_phi in units of e^{1..7}
  Matrix<S> g;    // g_phi
  S vol;          // phi(phi) = (det b)^{1/9} in units of e^{1..7}
  KForm<S> star_phi;
  Inertia signature;
  std::string label;  // G2 or G2*
};

// b_phi(v, w) = (1/6) (v |_ phi) ^ (w |_ phi) ^ phi; the 1/6 makes the
// G2 normal form come out with det b = -eps and unit diagonal.
template <class S>
Matrix<S> b_phi_matrix(const KForm<S>& phi) {
  int n = phi.n;
  S six = scalar_traits<S>::from_int(6);
  Matrix<S> b(n, n);
  std::vector<KForm<S>> ins;
  ins.reserve(n);
  for (int i = 0; i < n; ++i) ins.push_back(interior(i, phi));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      S v = top_coeff(wedge(wedge(ins[i], ins[j]), phi)) / six;
      b(i, j) = v;
      b(j, i) = v;
    }
  return b;
}

template <class S>
S ninth_root(const S& v);

template <>
inline Rational ninth_root<Rational>(const Rational& v) {
  auto r = kth_root_exact(v, 9);
  if (!r) fail(Err::ExactSqrtUnavailable, "det b has no exact ninth root");
  return *r;
}
template <>
inline Quad ninth_root<Quad>(const Quad& v) {
  if (v.b != 0) fail(Err::ExactSqrtUnavailable, "det b ninth root outside Q");
  auto r = kth_root_exact(v.a, 9);
  if (!r) fail(Err::ExactSqrtUnavailable, "det b has no exact ninth root");
  return Quad(*r, Rational(0), v.d);
}
template <>
inline double ninth_root<double>(const double& v) {
  return v < 0 ? -std::pow(-v, 1.0 / 9) : std::pow(v, 1.0 / 9);
}

// Full G2(*) structure data of a stable 3-form on a 7-space.
template <class S>
G2Structure<S> g2_structure(const KForm<S>& phi, double tol = kFloatTol) {
  G2Structure<S> out;
  out.phi = phi;
  out.b = b_phi_matrix(phi);
  S det = determinant(out.b);
  if (is_zero(det)) fail(Err::NotStable, "g2_structure: det b_phi = 0");
  if constexpr (!scalar_traits<S>::exact) {
    double scale = 0;
    for (int i = 0; i < phi.n; ++i)
      for (int j = 0; j < phi.n; ++j) scale = std::max(scale, std::fabs(to_double(out.b(i, j))));
    // scale-relative stability test: det b is degree-7 in the entries
    if (std::fabs(to_double(det)) < 1e-20 * std::pow(scale, 7))
      fail(Err::NotStable, "g2_structure: det b_phi ~ 0");
  }
  out.vol = ninth_root<S>(det);
  out.g = Matrix<S>(phi.n, phi.n);
  for (int i = 0; i < phi.n; ++i)
    for (int j = 0; j < phi.n; ++j) out.g(i, j) = out.b(i, j) / out.vol;
  if constexpr (scalar_traits<S>::exact)
    out.signature = inertia_sym(out.g);
  else
    out.signature = inertia_sym_float(to_float(out.g), 1e-7);
  out.label = (out.signature.pos == 7) ? "G2" : "G2*";
  Orientation<S> ovol{phi.n, out.vol};
  out.star_phi = hodge_star(phi, out.g, ovol);
  return out;
}

// phi = omega ^ (s e^7) + rho on the 7-space extending the pair's 6-space.
template <class S>
KForm<S> embed_in_7(const KForm<S>& f) {
  KForm<S> r(7, f.k, f.multivector);
  const auto& masks = basis_masks(f.n, f.k);
  for (size_t t = 0; t < masks.size(); ++t) r.at_mask(masks[t]) = f.c[t];
  return r;
}

template <class S>
G2Structure<S> lift_to_7(const StablePair<S>& pair, const S& alpha_scale) {
  if (!pair.normalized) fail(Err::NotNormalized, "lift_to_7: pair not normalised");
  KForm<S> alpha = basis_form<S>(7, uint16_t(1) << 6) * alpha_scale;
  KForm<S> phi = wedge(embed_in_7(pair.omega), alpha) + embed_in_7(pair.rho);
  return g2_structure(phi);
}

// Cross product: g(x, a x b) = phi(x, a, b) for all x.
template <class S>
std::vector<S> cross_product(const G2Structure<S>& st, const std::vector<S>& a,
                             const std::vector<S>& b) {
  KForm<S> w = interior(b, interior(a, st.phi));  // w(x) = phi(a, b, x)... see below
  // interior(a, phi)(x, y) = phi(a, x, y); interior(b, .)(x) = phi(a, b, x)
  std::vector<S> rhs(st.phi.n);
  for (int i = 0; i < st.phi.n; ++i) rhs[i] = w.c[i];  // rhs_i = phi(a, b, e_i) = phi(e_i, a, b)
  Matrix<S> ginv = inverse(st.g);
  return ginv.apply(rhs);
}

template <class S>
struct Restriction6 {
  StablePair<S> pair;    // in the adapted basis w_1..w_6 of n-perp
  Matrix<S> basis;       // columns: w_1..w_6, n (in ambient coordinates)
  int epsilon;           // -g(n,n)
};

// Hypersurface reduction: omega = n |_ phi, rho = phi|_W, W = n-perp.
template <class S>
Restriction6<S> restrict_to_6(const G2Structure<S>& st, const std::vector<S>& nvec,
                              const PairOptions& opt = {}) {
  int n = st.phi.n;
  std::vector<S> gn = st.g.apply(nvec);
  S nn = scalar_traits<S>::from_int(0);
  for (int i = 0; i < n; ++i) nn += gn[i] * nvec[i];
  if (is_zero(nn) || (!scalar_traits<S>::exact && std::fabs(to_double(nn)) < opt.tol))
    fail(Err::NullNormal, "restrict_to_6: null normal vector");
  // complement basis: project basis vectors, keep 6 independent ones
  Matrix<S> cand(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      S v = (i == j) ? scalar_traits<S>::from_int(1) : scalar_traits<S>::from_int(0);
      cand(i, j) = v - nvec[i] * gn[j] / nn;
    }
  }
  // pick 6 independent columns by elimination on a copy
  std::vector<int> keep;
  {
    Matrix<S> m = cand.transposed();  // rows = candidate vectors
    int rank = 0;
    std::vector<std::vector<S>> rows;
    for (int r = 0; r < n && rank < n - 1; ++r) {
      std::vector<S> v(n);
      for (int c = 0; c < n; ++c) v[c] = m(r, c);
      // reduce against accepted rows
      for (size_t p = 0; p < rows.size(); ++p) {
        int lead = -1;
        for (int c = 0; c < n; ++c)
          if (!is_zero(rows[p][c])) { lead = c; break; }
        if (lead < 0) continue;
        S f = v[lead] / rows[p][lead];
        for (int c = 0; c < n; ++c) v[c] -= f * rows[p][c];
      }
      double mx = 0;
      for (int c = 0; c < n; ++c) mx = std::max(mx, std::fabs(to_double(v[c])));
      bool nonzero = scalar_traits<S>::exact ? [&] {
        for (int c = 0; c < n; ++c)
          if (!is_zero(v[c])) return true;
        return false;
      }() : mx > opt.tol;
      if (nonzero) {
        rows.push_back(v);
        keep.push_back(r);
        ++rank;
      }
    }
  }
  Matrix<S> basis(n, n);
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < n; ++i) basis(i, j) = cand(i, keep[j]);
  for (int i = 0; i < n; ++i) basis(i, n - 1) = nvec[i];

  // pull back phi and n |_ phi to the adapted basis; the last coordinate is n
  KForm<S> omega7 = pullback(basis, interior(nvec, st.phi));
  KForm<S> rho7 = pullback(basis, st.phi);
  // drop the last index (restriction to W)
  KForm<S> omega6(6, 2), rho6(6, 3);
  for (auto m : basis_masks(7, 2))
    if (!(m >> 6 & 1)) omega6.at_mask(m) = omega7.at_mask(m);
  for (auto m : basis_masks(7, 3))
    if (!(m >> 6 & 1)) rho6.at_mask(m) = rho7.at_mask(m);

  Restriction6<S> out{pair_analyze(omega6, rho6, Orientation<S>{6, scalar_traits<S>::from_int(1)}, opt),
                      basis, -sgn(nn)};
  return out;
}

template <class S>
struct Spin7Structure {
  KForm<S> Phi;
  Matrix<S> g;
  Inertia signature;
  std::string label;  // Spin(7) or Spin0(3,4)
};

template <class S>
Spin7Structure<S> lift_to_8(const G2Structure<S>& st) {
  KForm<S> phi8(8, 3), star8(8, 4);
  for (auto m : basis_masks(7, 3)) phi8.at_mask(m) = st.phi.at_mask(m);
  for (auto m : basis_masks(7, 4)) star8.at_mask(m) = st.star_phi.at_mask(m);
  KForm<S> e8 = basis_form<S>(8, uint16_t(1) << 7);
  Spin7Structure<S> out;
  out.Phi = wedge(e8, phi8) + star8;
  out.g = Matrix<S>(8, 8);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) out.g(i, j) = st.g(i, j);
  out.g(7, 7) = scalar_traits<S>::from_int(1);
  if constexpr (scalar_traits<S>::exact)
    out.signature = inertia_sym(out.g);
  else
    out.signature = inertia_sym_float(to_float(out.g), 1e-7);
  out.label = out.signature.pos == 8 ? "Spin(7)" : "Spin0(3,4)";
  return out;
}

template <class S>
G2Structure<S> restrict_to_7(const Spin7Structure<S>& sp) {
  KForm<S> phi8 = interior(7, sp.Phi);
  KForm<S> phi(7, 3);
  for (auto m : basis_masks(8, 3))
    if (!(m >> 7 & 1)) phi.at_mask(m) = phi8.at_mask(m);
  return g2_structure(phi);
}

// beta ^ phi = 0 iff beta = 0 for 1- and 2-forms on a stable phi.
template <class S>
bool wedge_injectivity_check(const KForm<S>& phi, const KForm<S>& beta, double tol = 0.0) {
  KForm<S> w = wedge(beta, phi);
  if constexpr (scalar_traits<S>::exact) return w.is_zero_form();
  return w.max_abs() <= tol;
}

// Rank of beta -> beta ^ phi on Lambda^2 (exact).
template <class S>
int wedge_phi_rank2(const KForm<S>& phi) {
  const auto& m2 = basis_masks(7, 2);
  const auto& m5 = basis_masks(7, 5);
  Matrix<S> m(int(m5.size()), int(m2.size()));
  for (size_t j = 0; j < m2.size(); ++j) {
    KForm<S> w = wedge(basis_form<S>(7, m2[j]), phi);
    for (size_t i = 0; i < m5.size(); ++i) m(int(i), int(j)) = w.c[i];
  }
  return rank_of(m);
}

// The unique omega with omega^2/2 = sigma and omega^3 positively oriented.
template <class S>
KForm<S> sqrt_four_form(const KForm<S>& sigma, const Orientation<S>& o, double tol = kFloatTol) {
  int n = sigma.n;
  // M_ij = coefficient of sigma ^ e^i ^ e^j relative to e^{1..n}
  Matrix<S> M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      KForm<S> w = wedge(sigma, wedge(basis_form<S>(n, uint16_t(1) << i),
                                      basis_form<S>(n, uint16_t(1) << j)));
      M(i, j) = top_coeff(w);
      M(j, i) = -M(i, j);
    }
  S det = determinant(M);
  if (is_zero(det) || (!scalar_traits<S>::exact && std::fabs(to_double(det)) < tol))
    fail(Err::NotStable, "sqrt_four_form: sigma is not stable");
  Matrix<S> W0 = inverse(M);
  KForm<S> omega0(n, 2);
  const auto& masks = basis_masks(n, 2);
  for (size_t t = 0; t < masks.size(); ++t) {
    int i = -1, j = -1;
    for (int b = 0; b < n; ++b)
      if (masks[t] >> b & 1) (i < 0 ? i : j) = b;
    omega0.c[t] = W0(i, j);
  }
  KForm<S> sigma0 = wedge(omega0, omega0) * (scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2));
  // sigma = s^2 sigma0
  S s2{};
  bool found = false;
  double best = 0;
  for (size_t t = 0; t < sigma0.c.size(); ++t) {
    if (is_zero(sigma0.c[t])) continue;
    double a = std::fabs(to_double(sigma0.c[t]));
    if (!found || a > best) {
      best = a;
      s2 = sigma.c[t] / sigma0.c[t];
      found = true;
    }
  }
  if (!found) fail(Err::NotStable, "sqrt_four_form: degenerate candidate");
  KForm<S> check = sigma0 * s2 - sigma;
  if constexpr (scalar_traits<S>::exact) {
    if (!check.is_zero_form()) fail(Err::NotStable, "sqrt_four_form: sigma is not half a square");
  } else {
    if (check.max_abs() > tol * (1 + sigma.max_abs()))
      fail(Err::NotStable, "sqrt_four_form: sigma is not half a square");
  }
  if (sgn(s2) < 0) fail(Err::NoRealRoot, "sqrt_four_form: no real square root");
  auto s = sqrt_maybe(s2);
  if (!s) fail(Err::ExactSqrtUnavailable, "sqrt_four_form: scale is not a perfect square here");
  KForm<S> omega = omega0 * (*s);
  S w3 = top_coeff(wedge(omega, wedge(omega, omega)));
  if (sgn(w3) * o.sign() < 0) omega = -omega;
  return omega;
}

// sigma_hat: the dual two-form of a stable four-form, sigma_hat = omega/2.
template <class S>
KForm<S> four_form_dual(const KForm<S>& sigma, const Orientation<S>& o) {
  return sqrt_four_form(sigma, o) * (scalar_traits<S>::from_int(1) / scalar_traits<S>::from_int(2));
}

}  // namespace hlab
