#include "hitchinlab/spkahler.hpp"

namespace hlab {

namespace {

CxR cxi() { return CxR(Rational(0), Rational(1)); }

// diagonal metric value h_i for signature (p, q)
int hsign(const ComplexThreeVectorSpace& sp, int i) { return i < sp.p ? 1 : -1; }

// Hermitian congruence inertia over Q(i)
Inertia hermitian_inertia(std::vector<std::vector<CxR>> a) {
  int n = int(a.size());
  Inertia out;
  auto is0 = [](const CxR& z) { return is_zero(z); };
  for (int i = 0; i < n; ++i) {
    if (is0(a[size_t(i)][size_t(i)])) {
      int swp = -1, off = -1;
      for (int j = i + 1; j < n; ++j)
        if (!is0(a[size_t(j)][size_t(j)])) { swp = j; break; }
      if (swp < 0)
        for (int j = i + 1; j < n; ++j)
          if (!is0(a[size_t(i)][size_t(j)])) { off = j; break; }
      if (swp >= 0) {
        for (int c = 0; c < n; ++c) std::swap(a[size_t(i)][size_t(c)], a[size_t(swp)][size_t(c)]);
        for (int r = 0; r < n; ++r) std::swap(a[size_t(r)][size_t(i)], a[size_t(r)][size_t(swp)]);
      } else if (off >= 0) {
        // make the pivot real nonzero: col_i += w col_off, row_i += conj(w) row_off
        CxR z = a[size_t(i)][size_t(off)];
        CxR w = is_zero(z.re) ? cxi() : CxR(Rational(1));
        for (int r = 0; r < n; ++r) a[size_t(r)][size_t(i)] += w * a[size_t(r)][size_t(off)];
        for (int c = 0; c < n; ++c) a[size_t(i)][size_t(c)] += w.conj() * a[size_t(off)][size_t(c)];
      } else {
        ++out.zero;
        continue;
      }
    }
    CxR piv = a[size_t(i)][size_t(i)];
    if (!is_zero(piv.im)) fail(Err::DegenerateRestriction, "hermitian pivot not real");
    (sgn(piv.re) > 0 ? out.pos : out.neg) += 1;
    for (int j = i + 1; j < n; ++j) {
      if (is0(a[size_t(i)][size_t(j)])) continue;
      CxR f = a[size_t(i)][size_t(j)] / piv;
      for (int r = 0; r < n; ++r) a[size_t(r)][size_t(j)] -= f * a[size_t(r)][size_t(i)];
      CxR fc = f.conj();
      for (int c = 0; c < n; ++c) a[size_t(j)][size_t(c)] -= fc * a[size_t(i)][size_t(c)];
    }
  }
  return out;
}

CForm one_vector(int n, int i) { return basis_form<CxR>(n, uint16_t(1) << i, true); }

CForm wedge3(const CForm& a, const CForm& b, const CForm& c) { return wedge(wedge(a, b), c); }

}  // namespace

ComplexThreeVectorSpace su_space(int p, int q) {
  ComplexThreeVectorSpace sp;
  sp.p = p;
  sp.q = q;
  return sp;
}

CxR ComplexThreeVectorSpace::gamma(const CForm& v, const CForm& w) const {
  // diagonal on the mask basis: gamma(e_S, e_T) = [S == T] prod h_i
  CxR out{};
  const auto& masks = basis_masks(6, 3);
  for (size_t t = 0; t < masks.size(); ++t) {
    if (is_zero(v.c[t]) && is_zero(w.c[t])) continue;
    int prod = 1;
    for (int i = 0; i < 6; ++i)
      if (masks[t] >> i & 1) prod *= hsign(*this, i);
    CxR term = v.c[t] * w.c[t].conj();
    if (prod < 0) term = -term;
    out += term;
  }
  return out;
}

CxR ComplexThreeVectorSpace::omega(const CForm& v, const CForm& w) const {
  return top_coeff(wedge(v, w)) / nu_coeff;
}

CForm ComplexThreeVectorSpace::tau(const CForm& v) const {
  CForm out(6, 3, true);
  const auto& masks = basis_masks(6, 3);
  for (size_t t = 0; t < masks.size(); ++t) {
    CxR om = omega(basis_form<CxR>(6, masks[t], true), v);
    int prod = 1;
    for (int i = 0; i < 6; ++i)
      if (masks[t] >> i & 1) prod *= hsign(*this, i);
    CxR w = om.conj();
    if (prod < 0) w = -w;
    // sign fixed so that gamma(u, v) = i Omega(u, tau v) holds identically
    out.c[t] = -(cxi() * w);
  }
  return out;
}

int ComplexThreeVectorSpace::tau_square_sign() const {
  int sign = 0;
  const auto& masks = basis_masks(6, 3);
  for (size_t t = 0; t < masks.size(); ++t) {
    CForm b = basis_form<CxR>(6, masks[t], true);
    CForm tt = tau(tau(b));
    for (size_t s = 0; s < tt.c.size(); ++s) {
      if (s == t) continue;
      if (!is_zero(tt.c[s])) fail(Err::DegenerateRestriction, "tau^2 is not a scalar");
    }
    CxR d = tt.c[t];
    if (!is_zero(d.im)) fail(Err::DegenerateRestriction, "tau^2 is not real");
    int sg = sgn(d.re);
    if (sign == 0)
      sign = sg;
    else if (sign != sg)
      fail(Err::DegenerateRestriction, "tau^2 is not proportional to the identity");
  }
  return sign;
}

Inertia ComplexThreeVectorSpace::restricted_signature(const std::vector<CForm>& basis) const {
  int n = int(basis.size());
  std::vector<std::vector<CxR>> gram(size_t(n), std::vector<CxR>(size_t(n), CxR{}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[size_t(i)][size_t(j)] = gamma(basis[size_t(i)], basis[size_t(j)]);
  Inertia in = hermitian_inertia(gram);
  if (in.zero > 0) fail(Err::DegenerateRestriction, "restricted gamma is degenerate");
  return in;
}

namespace {

// tangent space of the decomposable cone at v1 ^ v2 ^ v3: the span of
// w ^ v2 ^ v3, v1 ^ w ^ v3, v1 ^ v2 ^ w over all w
bool in_decomposable_tangent(const std::vector<CForm>& factors, const CForm& b) {
  std::vector<CForm> gens;
  for (int slot = 0; slot < 3; ++slot)
    for (int i = 0; i < 6; ++i) {
      CForm w = one_vector(6, i);
      CForm g = wedge3(slot == 0 ? w : factors[0], slot == 1 ? w : factors[1],
                       slot == 2 ? w : factors[2]);
      gens.push_back(g);
    }
  // rank over Q(i): twice the real representation is unnecessary; use complex
  // elimination on the 20-dim coefficients
  Matrix<CxR> m(int(gens.size()) + 1, 20);
  for (size_t r = 0; r < gens.size(); ++r)
    for (int c = 0; c < 20; ++c) m(int(r), c) = gens[r].c[size_t(c)];
  int rank_gens = rank_of(m);
  for (int c = 0; c < 20; ++c) m(int(gens.size()), c) = b.c[size_t(c)];
  return rank_of(m) == rank_gens;
}

OrbitSignatureReport su_orbit_report(int p, int q, const std::string& base,
                                     const std::vector<CForm>& factors,
                                     const std::vector<CForm>& tangent, const CForm& pvec,
                                     const std::string& group) {
  auto sp = su_space(p, q);
  for (const auto& b : tangent)
    if (!in_decomposable_tangent(factors, b))
      fail(Err::DegenerateRestriction, "transcribed basis vector is not tangent");
  OrbitSignatureReport rep;
  rep.group = group;
  rep.base_point = base;
  rep.tangent = sp.restricted_signature(tangent);
  rep.gamma_pp = sp.gamma(pvec, pvec);
  // projective part: gamma on tangent vectors projected to p-perp
  if (!is_zero(rep.gamma_pp)) {
    std::vector<CForm> proj;
    for (const auto& b : tangent) {
      CxR f = sp.gamma(b, pvec) / rep.gamma_pp;
      CForm bp = b;
      for (size_t i = 0; i < bp.c.size(); ++i) bp.c[i] -= f * pvec.c[i];
      bool zero = true;
      for (auto& cc : bp.c)
        if (!is_zero(cc)) zero = false;
      if (!zero) proj.push_back(bp);
    }
    int n = int(proj.size());
    std::vector<std::vector<CxR>> gram(size_t(n), std::vector<CxR>(size_t(n), CxR{}));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gram[size_t(i)][size_t(j)] = sp.gamma(proj[size_t(i)], proj[size_t(j)]) / rep.gamma_pp;
    Inertia in = hermitian_inertia(gram);
    rep.projective = Inertia{in.pos, in.neg, 0};
  }
  return rep;
}

OrbitSignatureReport sl6r_report() {
  // complex basis e_j = g_j + i g_{j+3} of C^6 = (R^6)^C, conjugation fixes R^6
  auto ev = [&](int j) {
    CForm v = one_vector(6, j);
    for (auto& c : one_vector(6, j + 3).c) (void)c;
    CForm w = one_vector(6, j + 3);
    CForm out(6, 1, true);
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = v.c[i] + cxi() * w.c[i];
    return out;
  };
  auto conj_form = [](const CForm& f) {
    CForm out = f;
    for (auto& c : out.c) c = c.conj();
    return out;
  };
  CForm e1 = ev(0), e2 = ev(1), e3 = ev(2);
  CForm e1b = conj_form(e1), e2b = conj_form(e2), e3b = conj_form(e3);
  CForm pvec = wedge3(e1, e2, e3);
  // nu = i e_123 ^ conj(e_123): a real multiple of g_{1..6}
  CxR nu = cxi() * top_coeff(wedge(pvec, conj_form(pvec)));
  if (!is_zero(nu.im) || sgn(nu.re) == 0) fail(Err::DegenerateRestriction, "nu is not real");
  auto Om = [&](const CForm& v, const CForm& w) { return top_coeff(wedge(v, w)) / nu; };
  auto gam = [&](const CForm& v, const CForm& w) { return cxi() * Om(v, conj_form(w)); };
  std::vector<CForm> tangent = {
      pvec,
      wedge3(e1, e2, e3b),  wedge3(e1, e3, e2b),  wedge3(e2, e3, e1b),
      wedge3(e1, e2, e1b),  wedge3(e1, e3, e1b),  wedge3(e1, e2, e2b),
      -wedge3(e2, e3, e3b), wedge3(e2, e3, e2b),  wedge3(e1, e3, e3b)};
  std::vector<CForm> factors = {e1, e2, e3};
  for (const auto& b : tangent)
    if (!in_decomposable_tangent(factors, b))
      fail(Err::DegenerateRestriction, "transcribed basis vector is not tangent");
  int n = int(tangent.size());
  std::vector<std::vector<CxR>> gram(size_t(n), std::vector<CxR>(size_t(n), CxR{}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[size_t(i)][size_t(j)] = gam(tangent[size_t(i)], tangent[size_t(j)]);
  OrbitSignatureReport rep;
  rep.group = "SL(6,R)";
  rep.base_point = "e123, E with E and conj(E) transversal";
  rep.tangent = hermitian_inertia(gram);
  rep.gamma_pp = gam(pvec, pvec);
  // projective: gamma on tangent cap p-perp
  std::vector<CForm> proj;
  for (const auto& b : tangent) {
    CxR f = gam(b, pvec) / rep.gamma_pp;
    CForm bp = b;
    for (size_t i = 0; i < bp.c.size(); ++i) bp.c[i] -= f * pvec.c[i];
    bool zero = true;
    for (auto& cc : bp.c)
      if (!is_zero(cc)) zero = false;
    if (!zero) proj.push_back(bp);
  }
  int m = int(proj.size());
  std::vector<std::vector<CxR>> gram2(size_t(m), std::vector<CxR>(size_t(m), CxR{}));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      gram2[size_t(i)][size_t(j)] = gam(proj[size_t(i)], proj[size_t(j)]) / rep.gamma_pp;
  Inertia in = hermitian_inertia(gram2);
  rep.projective = Inertia{in.pos, in.neg, 0};
  return rep;
}

}  // namespace

OrbitSignatureReport orbit_signature(const std::string& which) {
  auto e = [&](int i) { return one_vector(6, i); };
  if (which == "su33-e123") {
    CForm p = wedge3(e(0), e(1), e(2));
    std::vector<CForm> tangent = {p};
    // f_i ^ e_jk over i in {1,2,3}, jk in {12, 13, 23}
    for (int i = 3; i < 6; ++i)
      for (auto [j, k] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        tangent.push_back(wedge3(e(i), e(j), e(k)));
    return su_orbit_report(3, 3, "e123", {e(0), e(1), e(2)}, tangent, p, "SU(3,3)");
  }
  if (which == "su33-e12f1") {
    CForm p = wedge3(e(0), e(1), e(3));
    std::vector<CForm> tangent = {
        wedge3(e(0), e(3), e(4)),  // e1 f12
        wedge3(e(1), e(3), e(4)),  // e2 f12
        wedge3(e(1), e(3), e(5)),  // e2 f13
        wedge3(e(0), e(3), e(5)),  // e1 f13
        wedge3(e(0), e(1), e(2)),  // e123
        wedge3(e(0), e(2), e(3)),  // e13 f1
        wedge3(e(1), e(2), e(3)),  // e23 f1
        wedge3(e(0), e(1), e(3)),  // e12 f1 = p
        wedge3(e(0), e(1), e(4)),  // e12 f2
        wedge3(e(0), e(1), e(5)),  // e12 f3
    };
    return su_orbit_report(3, 3, "e12 ^ f1", {e(0), e(1), e(3)}, tangent, p, "SU(3,3)");
  }
  if (which == "su51-e123") {
    CForm p = wedge3(e(0), e(1), e(2));
    std::vector<CForm> tangent = {
        p,
        wedge3(e(1), e(2), e(3)), wedge3(e(1), e(2), e(4)), wedge3(e(0), e(2), e(3)),
        wedge3(e(0), e(2), e(4)), wedge3(e(0), e(1), e(3)), wedge3(e(0), e(1), e(4)),
        wedge3(e(0), e(1), e(5)), wedge3(e(0), e(2), e(5)), wedge3(e(1), e(2), e(5)),
    };
    return su_orbit_report(5, 1, "e123", {e(0), e(1), e(2)}, tangent, p, "SU(5,1)");
  }
  if (which == "sl6r-e123") return sl6r_report();
  fail(Err::DegenerateRestriction, "unknown orbit case: " + which);
}

// ---- para-Kaehler structure on lambda > 0 ----

namespace {

// factor span of a decomposable 3-form: kernel of beta -> beta ^ alpha
std::vector<std::vector<Rational>> factor_span(const KForm<Rational>& alpha) {
  const auto& m4 = basis_masks(6, 4);
  Matrix<Rational> m(int(m4.size()), 6);
  for (int j = 0; j < 6; ++j) {
    KForm<Rational> w = wedge(basis_form<Rational>(6, uint16_t(1) << j), alpha);
    for (size_t i = 0; i < m4.size(); ++i) m(int(i), j) = w.c[i];
  }
  return nullspace(m);
}

}  // namespace

ParaKahlerPoint para_structure(const KForm<Rational>& psi) {
  Orientation<Rational> lex{6, Rational(1)};
  auto cls = j_and_dual(psi, lex);
  if (cls.epsilon <= 0) fail(Err::WrongOrbit, "para_structure: lambda(psi) <= 0");
  ParaKahlerPoint out;
  out.psi = psi;
  out.f = cls.phi_vol;
  out.X_f = cls.dual;
  out.psi_plus = (psi + cls.dual) * Rational(1, 2);
  out.psi_minus = (psi - cls.dual) * Rational(1, 2);

  auto eplus = factor_span(out.psi_plus), eminus = factor_span(out.psi_minus);
  if (eplus.size() != 3 || eminus.size() != 3)
    fail(Err::WrongOrbit, "para_structure: decomposable split failed");
  Matrix<Rational> P(6, 6);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 6; ++i) {
      P(i, j) = eplus[size_t(j)][size_t(i)];
      P(i, j + 3) = eminus[size_t(j)][size_t(i)];
    }
  if (is_zero(determinant(P))) fail(Err::WrongOrbit, "para_structure: E+ and E- overlap");

  // L3P: third exterior power of P on the mask basis
  const auto& m3 = basis_masks(6, 3);
  Matrix<Rational> L3P(20, 20);
  for (size_t t = 0; t < m3.size(); ++t) {
    KForm<Rational> acc(6, 0);
    acc.c[0] = Rational(1);
    for (int i = 0; i < 6; ++i) {
      if (!(m3[t] >> i & 1)) continue;
      KForm<Rational> col(6, 1);
      for (int r = 0; r < 6; ++r) col.c[size_t(r)] = P(r, i);
      acc = wedge(acc, col);
    }
    for (int r = 0; r < 20; ++r) L3P(r, int(t)) = acc.c[size_t(r)];
  }
  Matrix<Rational> Jad(20, 20);
  for (size_t t = 0; t < m3.size(); ++t) {
    int plus_bits = popcount16(m3[t] & 0b000111);
    Jad(int(t), int(t)) = Rational(plus_bits >= 2 ? 1 : -1);
  }
  out.J = L3P * Jad * inverse(L3P);

  // g = Omega(., J .): Omega(e_S, e_T) = merge sign on complementary masks
  Matrix<Rational> W(20, 20);
  for (size_t s = 0; s < m3.size(); ++s)
    for (size_t t = 0; t < m3.size(); ++t)
      if ((m3[s] | m3[t]) == 0b111111) W(int(s), int(t)) = Rational(merge_sign(m3[s], m3[t]));
  out.g = W * out.J;
  out.signature = inertia_sym(out.g);
  return out;
}

KForm<Rational> xf_directional(const KForm<Rational>& psi, const KForm<Rational>& xi) {
  Orientation<Rational> lex{6, Rational(1)};
  auto cls = j_and_dual(psi, lex);
  if (cls.epsilon <= 0) fail(Err::WrongOrbit, "xf_directional: lambda(psi) <= 0");
  Rational lam = cls.lambda, f = cls.phi_vol;
  // d lambda(xi): degree-1 coefficient of lambda(psi + t xi)
  auto arr = lambda_poly(psi, xi, lex);
  Rational dlam = arr[1];
  // Hess lambda(xi, e_T) by bivariate coefficient extraction
  const auto& m3 = basis_masks(6, 3);
  std::vector<Rational> hess(20);
  for (size_t t = 0; t < m3.size(); ++t) {
    KForm<Rational> et = basis_form<Rational>(6, m3[t]);
    auto F = [&](int s, int u) {
      KForm<Rational> q = psi;
      for (size_t i = 0; i < q.c.size(); ++i)
        q.c[i] += Rational(s) * xi.c[i] + Rational(u) * et.c[i];
      return lambda3(q, lex);
    };
    Rational A = (F(1, 1) - F(1, -1) - F(-1, 1) + F(-1, -1)) / 4;
    Rational B = (F(2, 1) - F(2, -1) - F(-2, 1) + F(-2, -1)) / 8;
    Rational C = (F(1, 2) - F(1, -2) - F(-1, 2) + F(-1, -2)) / 8;
    Rational c31 = (B - A) / 3, c13 = (C - A) / 3;
    hess[t] = A - c13 - c31;
  }
  // sharp via Omega: w with Omega(w, e_T) = H_T
  KForm<Rational> grad(6, 3);
  for (size_t t = 0; t < m3.size(); ++t) {
    uint16_t comp = uint16_t(0b111111 & ~m3[t]);
    Rational om = Rational(merge_sign(comp, m3[t]));  // Omega(e_comp, e_T)
    grad.at_mask(comp) = hess[t] / om;
  }
  // nabla_xi X_f = sharp(Hess lambda(xi, .))/(2f) - X_f Omega(X_f, xi)/f
  Rational om_xf_xi = top_coeff(wedge(cls.dual, xi));
  KForm<Rational> out(6, 3);
  for (size_t i = 0; i < out.c.size(); ++i)
    out.c[i] = grad.c[i] / (2 * f) - cls.dual.c[i] * om_xf_xi / f;
  return out;
}

KForm<Rational> real_points_projection(const CForm& v) {
  KForm<Rational> out(6, 3, v.multivector);
  for (size_t i = 0; i < v.c.size(); ++i) out.c[i] = v.c[i].re;
  return out;
}

ParaConeReport para_cone_base_point() {
  auto g = [&](int i) { return basis_form<Rational>(6, uint16_t(1) << i, true); };
  auto plus = [&](int i) { return g(i) + g(i + 3); };
  auto minus = [&](int i) { return g(i) - g(i + 3); };
  KForm<Rational> A = wedge(wedge(plus(0), plus(1)), plus(2));
  KForm<Rational> B = wedge(wedge(minus(0), minus(1)), minus(2));
  ParaConeReport rep;
  Rational nuAB = top_coeff(wedge(A, B));
  if (nuAB == 0) fail(Err::DegenerateRestriction, "para cone: A ^ B = 0");
  rep.gamma_pp = top_coeff(wedge(A, B)) / nuAB;  // Omega(A, B) w.r.t. nu = A ^ B
  rep.re_u123 = (A + B) * Rational(1, 2);
  Orientation<Rational> lex{6, Rational(1)};
  rep.lambda = lambda3(rep.re_u123, lex);

  // tangent basis sigma_+/- parts: conj swaps the +/- components
  struct PM {
    KForm<Rational> plus, minus;
  };
  auto u = [&](int i) { return PM{plus(i), minus(i)}; };
  auto ub = [&](int i) { return PM{minus(i), plus(i)}; };
  auto w3 = [&](const PM& a, const PM& b, const PM& c) {
    return PM{wedge(wedge(a.plus, b.plus), c.plus), wedge(wedge(a.minus, b.minus), c.minus)};
  };
  auto neg = [&](const PM& a) { return PM{-a.plus, -a.minus}; };
  std::vector<PM> tangent = {
      w3(u(0), u(1), u(2)),
      w3(ub(0), u(1), u(2)), w3(ub(1), u(2), u(0)), w3(ub(2), u(0), u(1)),
      w3(ub(1), u(1), u(2)), w3(ub(1), u(0), u(1)), w3(ub(2), u(1), u(2)),
      w3(ub(0), u(0), u(2)), w3(ub(2), u(0), u(2)), neg(w3(ub(0), u(0), u(1)))};
  rep.omega_vanishes_on_tangent = true;
  for (const auto& x : tangent)
    for (const auto& y : tangent) {
      if (!is_zero(top_coeff(wedge(x.plus, y.plus))) ||
          !is_zero(top_coeff(wedge(x.minus, y.minus))))
        rep.omega_vanishes_on_tangent = false;
    }
  return rep;
}

}  // namespace hlab
