// Dense univariate polynomials over the scalar tower, Sturm sequences for
// exact real-root counting, and a Durand-Kerner fallback for float roots.
#pragma once

#include <complex>
#include <vector>

#include "hitchinlab/scalar.hpp"

namespace hlab {

template <class S>
struct Poly {
  std::vector<S> c;  // ascending, c[i] x^i

  Poly() = default;
  explicit Poly(std::vector<S> cc) : c(std::move(cc)) { trim(); }
  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  int degree() const { return int(c.size()) - 1; }  // -1 for zero polynomial
  bool is_zero_poly() const { return c.empty(); }

  S eval(const S& x) const {
    S acc = scalar_traits<S>::from_int(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c[i];
    return acc;
  }
  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<S> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * scalar_traits<S>::from_int(long(i));
    return Poly(std::move(d));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> r(std::max(a.c.size(), b.c.size()), scalar_traits<S>::from_int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<S> r(std::max(a.c.size(), b.c.size()), scalar_traits<S>::from_int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
    std::vector<S> r(a.c.size() + b.c.size() - 1, scalar_traits<S>::from_int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

// Euclidean remainder over a field.
template <class S>
Poly<S> poly_rem(Poly<S> a, const Poly<S>& b) {
  while (!a.is_zero_poly() && a.degree() >= b.degree()) {
    S f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= f * b.c[i];
    a.c.pop_back();
    a.trim();
  }
  return a;
}

template <class S>
std::vector<Poly<S>> sturm_chain(const Poly<S>& p) {
  std::vector<Poly<S>> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero_poly() && chain.back().degree() > 0) {
    Poly<S> r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero_poly()) break;
    for (auto& v : r.c) v = -v;
    chain.push_back(std::move(r));
  }
  return chain;
}

template <class S>
int sign_variations_at(const std::vector<Poly<S>>& chain, const S& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

template <class S>
int sign_variations_at_inf(const std::vector<Poly<S>>& chain, int dir) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero_poly()) continue;
    int s = sgn(p.c.back());
    if (dir < 0 && (p.degree() & 1)) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Number of distinct real roots in (a, b].
template <class S>
int count_roots(const Poly<S>& p, const S& a, const S& b) {
  auto chain = sturm_chain(p);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

template <class S>
int count_real_roots(const Poly<S>& p) {
  auto chain = sturm_chain(p);
  return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

// Divide out (x - r) as often as it divides p exactly; returns multiplicity.
template <class S>
int deflate_root(Poly<S>& p, const S& r) {
  int mult = 0;
  while (!p.is_zero_poly() && p.degree() >= 1 && is_zero(p.eval(r))) {
    // synthetic division
    std::vector<S> q(p.c.size() - 1);
    S carry = p.c.back();
    for (int i = int(p.c.size()) - 2; i >= 0; --i) {
      q[i] = carry;
      carry = p.c[size_t(i)] + carry * r;
    }
    p = Poly<S>(std::move(q));
    ++mult;
  }
  return mult;
}

// All complex roots by Durand-Kerner; deterministic start, for degree <= 8.
std::vector<std::complex<double>> roots_durand_kerner(const std::vector<double>& coeffs);

// Real roots of a float polynomial, clustered at |Im| < imag_tol * scale.
std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol = 1e-10);

}  // namespace hlab
