// Dense exterior algebra on R^n, n <= 8. A k-form (or k-vector) stores its
// C(n,k) coefficients over strictly increasing index tuples in lexicographic
// order; tuples are encoded as bitmasks and all signs come from permutation
// parity. Interior products contract in the first slot:
//   (v |_ rho)(x, y) = rho(v, x, y).
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hitchinlab/linalg.hpp"
#include "hitchinlab/scalar.hpp"

namespace hlab {

int binom(int n, int k);
// Basis masks of the (n,k) slot, ordered by lexicographic index tuple.
const std::vector<uint16_t>& basis_masks(int n, int k);
int rank_of_mask(int n, uint16_t mask);
int popcount16(uint16_t m);
// Parity sign of the concatenated sequence (tuple of a, then tuple of b),
// a and b disjoint masks: +1 if sorting it needs an even permutation.
int merge_sign(uint16_t a, uint16_t b);

template <class S>
struct KForm {
  int n = 0, k = 0;
  bool multivector = false;
  std::vector<S> c;

  KForm() = default;
  KForm(int n_, int k_, bool mv = false)
      : n(n_), k(k_), multivector(mv), c(binom(n_, k_), scalar_traits<S>::from_int(0)) {}

  S& at_mask(uint16_t m) { return c[rank_of_mask(n, m)]; }
  const S& at_mask(uint16_t m) const { return c[rank_of_mask(n, m)]; }

  bool is_zero_form() const {
    for (const auto& v : c)
      if (!is_zero(v)) return false;
    return true;
  }
  double max_abs() const {
    double m = 0;
    for (const auto& v : c) m = std::max(m, std::fabs(to_double(v)));
    return m;
  }
  KForm operator-() const {
    KForm r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend KForm operator+(const KForm& a, const KForm& b) {
    KForm r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend KForm operator-(const KForm& a, const KForm& b) {
    KForm r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  KForm operator*(const S& s) const {
    KForm r = *this;
    for (auto& v : r.c) v = v * s;
    return r;
  }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.n == b.n && a.k == b.k && a.c == b.c;
  }
};

// Basis k-form e^{mask} (or k-vector e_{mask}).
template <class S>
KForm<S> basis_form(int n, uint16_t mask, bool mv = false) {
  KForm<S> f(n, popcount16(mask), mv);
  f.at_mask(mask) = scalar_traits<S>::from_int(1);
  return f;
}

template <class S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
  if (a.n != b.n) fail(Err::DimensionMismatch, "wedge: ambient dimensions differ");
  if (a.k + b.k > a.n) fail(Err::DimensionMismatch, "wedge: degree exceeds dimension");
  KForm<S> r(a.n, a.k + b.k, a.multivector);
  const auto& ma = basis_masks(a.n, a.k);
  const auto& mb = basis_masks(b.n, b.k);
  for (size_t i = 0; i < ma.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < mb.size(); ++j) {
      if (is_zero(b.c[j])) continue;
      if (ma[i] & mb[j]) continue;
      int s = merge_sign(ma[i], mb[j]);
      S t = a.c[i] * b.c[j];
      if (s < 0) t = -t;
      r.at_mask(ma[i] | mb[j]) += t;
    }
  }
  return r;
}

// Interior product with the basis vector e_i (0-based), first-slot convention.
template <class S>
KForm<S> interior(int i, const KForm<S>& a) {
  if (a.k == 0) fail(Err::DegreeZeroInterior, "interior: degree 0 input");
  KForm<S> r(a.n, a.k - 1, a.multivector);
  const auto& ma = basis_masks(a.n, a.k);
  uint16_t bit = uint16_t(1) << i;
  for (size_t t = 0; t < ma.size(); ++t) {
    if (!(ma[t] & bit) || is_zero(a.c[t])) continue;
    int below = popcount16(ma[t] & (bit - 1));
    S v = a.c[t];
    if (below & 1) v = -v;
    r.at_mask(ma[t] & ~bit) += v;
  }
  return r;
}

// Interior product with a general vector v = sum v_i e_i.
template <class S>
KForm<S> interior(const std::vector<S>& v, const KForm<S>& a) {
  KForm<S> r(a.n, a.k - 1, a.multivector);
  for (int i = 0; i < a.n; ++i) {
    if (is_zero(v[i])) continue;
    KForm<S> t = interior(i, a);
    for (size_t j = 0; j < r.c.size(); ++j) r.c[j] += v[i] * t.c[j];
  }
  return r;
}

// Contraction of a multivector w into a form mu:
//   (iota_{v1^...^vm} mu)(x, ...) = mu(v1, ..., vm, x, ...).
template <class S>
KForm<S> contract(const KForm<S>& w, const KForm<S>& mu) {
  if (w.n != mu.n || w.k > mu.k) fail(Err::DimensionMismatch, "contract: bad degrees");
  KForm<S> r(mu.n, mu.k - w.k);
  const auto& mw = basis_masks(w.n, w.k);
  const auto& mm = basis_masks(mu.n, mu.k);
  for (size_t i = 0; i < mw.size(); ++i) {
    if (is_zero(w.c[i])) continue;
    for (size_t j = 0; j < mm.size(); ++j) {
      if (is_zero(mu.c[j])) continue;
      if ((mw[i] & mm[j]) != mw[i]) continue;
      uint16_t rest = mm[j] & ~mw[i];
      int s = merge_sign(mw[i], rest);
      S t = w.c[i] * mu.c[j];
      if (s < 0) t = -t;
      r.at_mask(rest) += t;
    }
  }
  return r;
}

// Chosen positive generator of Lambda^n: nu = top * e^{1..n}.
template <class S>
struct Orientation {
  int n = 6;
  S top = scalar_traits<S>::from_int(1);
  int sign() const { return sgn(top); }
};

// kappa: Lambda^k V* ~ Lambda^{n-k} V (x) Lambda^n V*. Returns the unique
// multivector w with contract(w, nu) == a, where nu is o's positive generator;
// the Lambda^n V* factor is carried implicitly in units of nu.
template <class S>
KForm<S> kappa_dual(const KForm<S>& a, const Orientation<S>& o) {
  KForm<S> w(a.n, a.n - a.k, true);
  uint16_t full = uint16_t((1 << a.n) - 1);
  const auto& mw = basis_masks(a.n, a.n - a.k);
  for (size_t i = 0; i < mw.size(); ++i) {
    uint16_t rest = full & ~mw[i];
    int s = merge_sign(mw[i], rest);
    S v = a.at_mask(rest) / o.top;
    if (s < 0) v = -v;
    w.c[i] = v;
  }
  return w;
}

// Inverse of kappa_dual: the form a with contract(w, nu) == a.
template <class S>
KForm<S> kappa_dual_inv(const KForm<S>& w, const Orientation<S>& o) {
  KForm<S> a(w.n, w.n - w.k, false);
  uint16_t full = uint16_t((1 << w.n) - 1);
  const auto& mw = basis_masks(w.n, w.k);
  for (size_t i = 0; i < mw.size(); ++i) {
    uint16_t rest = full & ~mw[i];
    int s = merge_sign(mw[i], rest);
    S v = w.c[i] * o.top;
    if (s < 0) v = -v;
    a.at_mask(rest) = v;
  }
  return a;
}

// Pullback by the linear map with vector-basis matrix A (columns = images of
// basis vectors): (A^* a)(v1, ..., vk) = a(A v1, ..., A vk). On one-forms this
// substitutes e^i -> sum_j A(i,j) e^j.
template <class S>
KForm<S> pullback(const Matrix<S>& a, const KForm<S>& f) {
  KForm<S> r(f.n, f.k, f.multivector);
  const auto& mf = basis_masks(f.n, f.k);
  for (size_t t = 0; t < mf.size(); ++t) {
    if (is_zero(f.c[t])) continue;
    KForm<S> acc(f.n, 0);
    acc.c[0] = f.c[t];
    for (int i = 0; i < f.n; ++i) {
      if (!(mf[t] >> i & 1)) continue;
      KForm<S> row(f.n, 1);
      for (int j = 0; j < f.n; ++j) row.c[j] = a(i, j);
      acc = wedge(acc, row);
    }
    for (size_t j = 0; j < r.c.size(); ++j) r.c[j] += acc.c[j];
  }
  return r;
}

template <class S>
struct LinearMap {
  Matrix<S> a;
  S det;
  explicit LinearMap(Matrix<S> m) : a(std::move(m)), det(determinant(a)) {}
  KForm<S> star(const KForm<S>& f) const { return pullback(a, f); }
};

// Metric volume form, positively oriented w.r.t. o: vol = sqrt|det g| * (unit
// top form in o's direction). Exact modes require |det g| to be a perfect
// square in the scalar field.
template <class S>
S metric_volume_coeff(const Matrix<S>& g, const Orientation<S>& o) {
  S d = determinant(g);
  if (is_zero(d)) fail(Err::DegenerateMetric, "hodge: degenerate metric");
  S ad = sgn(d) < 0 ? -d : d;
  auto root = sqrt_maybe(ad);
  if (!root) fail(Err::ExactSqrtUnavailable, "hodge: |det g| is not a perfect square here");
  return o.sign() < 0 ? -*root : *root;
}

// Hodge star: alpha ^ (*beta) = <alpha, beta>_g vol_g for all alpha.
template <class S>
KForm<S> hodge_star(const KForm<S>& b, const Matrix<S>& g, const Orientation<S>& o) {
  int n = b.n, k = b.k;
  Matrix<S> ginv = inverse(g);
  S vol = metric_volume_coeff(g, o);
  KForm<S> r(n, n - k);
  const auto& mk = basis_masks(n, k);
  uint16_t full = uint16_t((1 << n) - 1);
  for (size_t si = 0; si < mk.size(); ++si) {
    // <e^S, b> with the Gram determinant inner product
    std::array<int, 8> sidx{};
    int m = 0;
    for (int i = 0; i < n; ++i)
      if (mk[si] >> i & 1) sidx[m++] = i;
    S inner = scalar_traits<S>::from_int(0);
    for (size_t ti = 0; ti < mk.size(); ++ti) {
      if (is_zero(b.c[ti])) continue;
      std::array<int, 8> tidx{};
      int mt = 0;
      for (int i = 0; i < n; ++i)
        if (mk[ti] >> i & 1) tidx[mt++] = i;
      Matrix<S> gram(k, k);
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) gram(x, y) = ginv(sidx[x], tidx[y]);
      inner += determinant(gram) * b.c[ti];
    }
    if (is_zero(inner)) continue;
    uint16_t comp = full & ~mk[si];
    int s = merge_sign(mk[si], comp);
    S v = inner * vol;
    if (s < 0) v = -v;
    r.at_mask(comp) += v;
  }
  return r;
}

// Coefficient of a top-degree form relative to e^{1..n}.
template <class S>
S top_coeff(const KForm<S>& f) {
  return f.c[0];
}

// Evaluate a k-form on k basis vectors given as a mask-ordered index list.
template <class S>
S eval_basis(const KForm<S>& f, const std::vector<int>& idx) {
  // value on (e_{idx[0]}, ..., e_{idx[k-1]}); indices 0-based, must be distinct
  uint16_t mask = 0;
  for (int i : idx) mask |= uint16_t(1) << i;
  if (popcount16(mask) != int(idx.size())) return scalar_traits<S>::from_int(0);
  // parity of idx relative to sorted order
  int inv = 0;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) ++inv;
  S v = f.at_mask(mask);
  return (inv & 1) ? -v : v;
}

// Numeric copy of an exact form.
template <class S>
KForm<double> to_float(const KForm<S>& f) {
  KForm<double> r(f.n, f.k, f.multivector);
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = to_double(f.c[i]);
  return r;
}

template <class S>
Matrix<double> to_float(const Matrix<S>& m) {
  Matrix<double> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_double(m(i, j));
  return r;
}

}  // namespace hlab
