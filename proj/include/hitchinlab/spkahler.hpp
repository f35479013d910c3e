// The symplectic module Lambda^3 C^6: the invariant symplectic form Omega,
// the pseudo-Hermitian form gamma induced by a diagonal metric on C^6, the
// antilinear structure tau = i gamma^{-1} Omega with tau^2 = +-Id, tangent
// signatures at the standard orbit base points, and the para-Kaehler structure on
// the lambda > 0 orbit of Lambda^3 R^6.
#pragma once

#include <string>
#include <vector>

#include "hitchinlab/stable.hpp"

namespace hlab {

using CxR = Cx<Rational>;
using CForm = KForm<CxR>;  // three-vectors in Lambda^3 C^6 over Q(i)

// Lambda^3 C^6 with the pseudo-Hermitian form induced by
// h = diag(+1 x p, -1 x q) and a generator nu of Lambda^6 C^6.
struct ComplexThreeVectorSpace {
  int p = 3, q = 3;
  CxR nu_coeff{Rational(1)};  // nu = nu_coeff * e_{1..6}

  // gamma on decomposables: det(<v_i, w_j>), sesquilinear in the second slot
  CxR gamma(const CForm& v, const CForm& w) const;
  // Omega(v, w) nu = v ^ w
  CxR omega(const CForm& v, const CForm& w) const;
  // tau = i gamma^{-1} Omega (antilinear)
  CForm tau(const CForm& v) const;
  // tau^2 = +Id iff p - q = 0 mod 4
  int tau_square_sign() const;
  // inertia of gamma restricted to a tangent basis (must be nondegenerate)
  Inertia restricted_signature(const std::vector<CForm>& basis) const;
};

ComplexThreeVectorSpace su_space(int p, int q);

struct OrbitSignatureReport {
  std::string group, base_point;
  Inertia tangent;
  Inertia projective;  // gamma on T_p M \cap p^perp, when gamma(p,p) != 0
  CxR gamma_pp;
};

// Standard base points with their tangent bases:
//   "su33-e123", "su33-e12f1", "su51-e123", "sl6r-e123"
OrbitSignatureReport orbit_signature(const std::string& which);

// ---- para-Kaehler structure on {lambda > 0} in Lambda^3 R^6 ----

struct ParaKahlerPoint {
  KForm<Rational> psi, psi_plus, psi_minus;
  Rational f;            // sqrt(lambda), exact
  KForm<Rational> X_f;   // psi_plus - psi_minus
  Matrix<Rational> J;    // 20x20 on Lambda^3 R^6, J^2 = Id
  Matrix<Rational> g;    // omega(., J .) on Lambda^3 R^6
  Inertia signature;     // (10,10)
};

// J from the eigenspace description (identity on Lambda^3 E+ + Lambda^2 E+ ^ E-
// and minus identity on the mirror); requires an exact sqrt of lambda.
ParaKahlerPoint para_structure(const KForm<Rational>& psi);

// Exact directional derivative of X_f at psi (the cross-check route
// J = nabla X_f): d/dt X_f(psi + t xi) at t = 0, via the polarised quartic.
KForm<Rational> xf_directional(const KForm<Rational>& psi, const KForm<Rational>& xi);

// real points: Re on Lambda^3 C^6 (and the para-complex split checks)
KForm<Rational> real_points_projection(const CForm& v);

// gamma(u_123, u_123) = 1 for u_i = e_i + e f_i with nu = e u_123 ^ conj(u_123),
// computed in Lambda^3 R^6 via the split p = A s+ + B s-: returns Omega(A, B)
// relative to nu = A ^ B, plus the vanishing of Omega on the tangent basis.
struct ParaConeReport {
  Rational gamma_pp;
  bool omega_vanishes_on_tangent = false;
  KForm<Rational> re_u123;  // has lambda > 0
  Rational lambda;
};
ParaConeReport para_cone_base_point();

}  // namespace hlab
