// Lie algebras presented by the exterior derivatives of basis one-forms
// ("0,0,0,0,e12,e34"), the Chevalley-Eilenberg differential on all Lambda^k,
// and the h3+h3 toolbox: two-form orbit classification, nine-parameter
// half-flat families, and the d(rho_hat) kernel-subspace checks.
#pragma once

#include <functional>
#include <string>

#include "hitchinlab/stable.hpp"

namespace hlab {

template <class S>
struct LieAlgebraCE {
  int n = 0;
  std::vector<KForm<S>> d1;  // d(e^i) as 2-forms
  std::string name;

  KForm<S> d(const KForm<S>& a) const {
    KForm<S> r(n, a.k + 1);
    if (a.k >= n) return r;
    const auto& masks = basis_masks(n, a.k);
    for (size_t t = 0; t < masks.size(); ++t) {
      if (is_zero(a.c[t])) continue;
      int pos = 0;
      for (int i = 0; i < n; ++i) {
        if (!(masks[t] >> i & 1)) continue;
        if (!d1[i].is_zero_form()) {
          KForm<S> rest = basis_form<S>(n, masks[t] & ~(uint16_t(1) << i));
          KForm<S> term = wedge(d1[i], rest);
          S f = a.c[t];
          if (pos & 1) f = -f;
          for (size_t q = 0; q < r.c.size(); ++q) r.c[q] += f * term.c[q];
        }
        ++pos;
      }
    }
    return r;
  }

  bool d_squared_zero() const {
    for (int i = 0; i < n; ++i)
      if (!d(d1[i]).is_zero_form()) return false;
    return true;
  }

  // matrix of d : Lambda^k -> Lambda^{k+1} in the basis-mask coordinates
  Matrix<S> d_matrix(int k) const {
    const auto& from = basis_masks(n, k);
    const auto& to = basis_masks(n, k + 1);
    Matrix<S> m(int(to.size()), int(from.size()));
    for (size_t j = 0; j < from.size(); ++j) {
      KForm<S> img = d(basis_form<S>(n, from[j]));
      for (size_t i = 0; i < to.size(); ++i) m(int(i), int(j)) = img.c[i];
    }
    return m;
  }

  // one-form kernel of d as a bitmask of basis directions when it is spanned
  // by basis vectors (true for all algebras used here); -1 otherwise
  int kernel_mask() const {
    int mask = 0;
    for (int i = 0; i < n; ++i)
      if (d1[i].is_zero_form()) mask |= 1 << i;
    return mask;
  }
};

// Is the substitution matrix an automorphism: d(T e^i) = T(d e^i) for all i.
template <class S>
bool is_ce_automorphism(const LieAlgebraCE<S>& L, const Matrix<S>& t) {
  for (int i = 0; i < L.n; ++i) {
    KForm<S> lhs(L.n, 2), one(L.n, 1);
    for (int j = 0; j < L.n; ++j) one.c[j] = t(i, j);
    lhs = L.d(one);
    KForm<S> rhs = pullback(t, L.d1[i]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

template <class S>
struct TwoFormOrbit {
  int type = 0;          // 1..5
  Matrix<S> normalizer;  // pullback(normalizer, omega) == normal_form * scale
  S scale{};
  S beta{};         // type 4 parameter
  int subcase = 0;  // type 5: which kappa projection (2 or 3) was nonzero
  bool summand_swap = false;
};

// Standard h3+h3 basis: de^3 = e^12, df^3 = f^12 with f^i at slots 4..6.
template <class S>
LieAlgebraCE<S> h3h3();

template <class S>
LieAlgebraCE<S> algebra_from_d1(std::vector<KForm<S>> d1, std::string name);

// Salamon-style string: comma-separated images of e^1..e^n, e.g. "0,0,0,0,e12,e34".
template <class S>
LieAlgebraCE<S> algebra_from_string(const std::string& salamon, std::string name = "");

// Named lookup: "h3h3" or any Salamon string.
template <class S>
LieAlgebraCE<S> algebra_named(const std::string& name);

// Coefficient readers for two-forms on h3+h3, 1-based like the construction:
//   omega = sum alpha_i e^{(i+1)(i+2)} + sum beta_i f^{(i+1)(i+2)} + sum gamma_ij e^i f^j
template <class S>
struct OmegaCoeffs {
  S gamma[4][4];  // gamma[i][j], 1-based
  S alpha[4], beta[4];
};

template <class S>
OmegaCoeffs<S> read_omega(const KForm<S>& w) {
  auto at = [&](int b0, int b1) { return w.at_mask(uint16_t((1 << b0) | (1 << b1))); };
  OmegaCoeffs<S> oc{};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) oc.gamma[i][j] = at(i - 1, j + 2);
  oc.alpha[1] = at(1, 2);
  oc.alpha[2] = -at(0, 2);
  oc.alpha[3] = at(0, 1);
  oc.beta[1] = at(4, 5);
  oc.beta[2] = -at(3, 5);
  oc.beta[3] = at(3, 4);
  return oc;
}

template <class S>
bool kappa1_zero(const KForm<S>& w) {
  return is_zero(read_omega(w).gamma[3][3]);
}

// Orbit classification of a nondegenerate two-form with d(omega^2) = 0 on
// h3+h3, following the explicit normalising transformations of the orbit
// lemma. The returned normalizer is verified by pullback.
template <class S>
TwoFormOrbit<S> classify_two_form(const LieAlgebraCE<S>& L, const KForm<S>& omega);

// Normal forms omega_1..omega_5 (type 4 takes beta).
template <class S>
KForm<S> omega_normal_form(int type, const S& beta = scalar_traits<S>::from_int(0));

template <class S>
struct HalfFlatFamily {
  KForm<S> omega;
  std::vector<KForm<S>> basis;  // 9 generators of {d rho = 0, omega ^ rho = 0}
};

// The nine-parameter space of closed three-forms compatible with the given
// normal form (type 1 returns the printed parametrisation exactly).
template <class S>
HalfFlatFamily<S> halfflat_family(const LieAlgebraCE<S>& L, int orbit_type,
                                  const S& beta4 = scalar_traits<S>::from_int(1));

// rho(a_1..a_9): the printed type-1 family.
template <class S>
KForm<S> rho1_family(const std::array<S, 9>& a);

template <class S>
std::vector<KForm<S>> rho1_generators();

struct Trick17Report {
  bool in_lambda4_U = false;  // d(rho_hat) in Lambda^4 U
  bool J_invariant = false;   // J_rho U = U
  int U_mask = 0;
};

// U = ker d for the b1 = 4 algebras, span{e^1..e^4} for (0,0,0,0,0,e12+e34).
// Uses the unnormalised K-pullback K^* rho = phi^3 rho_hat, so everything is
// exact over the rationals.
template <class S>
Trick17Report trick17_check(const LieAlgebraCE<S>& L, const KForm<S>& rho) {
  if (!L.d(rho).is_zero_form()) fail(Err::NotClosed, "trick17: d rho != 0");
  Matrix<S> K = k_endomorphism(rho);
  S tr = scalar_traits<S>::from_int(0);
  for (int i = 0; i < rho.n; ++i)
    for (int j = 0; j < rho.n; ++j) tr += K(i, j) * K(j, i);
  if (is_zero(tr)) fail(Err::NotStable, "trick17: lambda(rho) = 0");

  int ker = L.kernel_mask();
  int U = (popcount16(uint16_t(ker)) == 4) ? ker : 0b001111;
  Trick17Report rep;
  rep.U_mask = U;

  KForm<S> dh = L.d(pullback(K, rho));  // phi^3 d(rho_hat)
  rep.in_lambda4_U = true;
  const auto& m4 = basis_masks(rho.n, 4);
  for (size_t t = 0; t < m4.size(); ++t)
    if ((m4[t] & ~U) && !is_zero(dh.c[t])) rep.in_lambda4_U = false;

  // U is a span of basis one-forms; invariance means J^* e^i stays in U for
  // i in U, i.e. the rows of K indexed by U vanish outside U.
  rep.J_invariant = true;
  for (int i = 0; i < rho.n; ++i) {
    if (!(U >> i & 1)) continue;
    for (int j = 0; j < rho.n; ++j)
      if (!(U >> j & 1) && !is_zero(K(i, j))) rep.J_invariant = false;
  }
  return rep;
}

// The four algebras of the kernel lemma, by Salamon string.
std::vector<std::string> trick17_algebras();

}  // namespace hlab
