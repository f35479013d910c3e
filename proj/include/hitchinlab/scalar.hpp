// Scalar tower: exact rationals (GMP), quadratic extensions Q(sqrt d),
// IEEE doubles, and a small complex wrapper used by the Lambda^3 C^6 module.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hlab {

using Rational = mpq_class;

// Canonicalised p/q (mpq_class(p, q) alone does not reduce the fraction).
inline Rational ratq(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }
inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

std::string rat_to_string(const Rational& q);
Rational rat_from_string(const std::string& s);  // "p/q", integers, or decimals like "0.25"

// Exact square root of a rational, if it is a perfect square.
std::optional<Rational> sqrt_exact(const Rational& q);
// Exact k-th root (k odd allowed for negative input).
std::optional<Rational> kth_root_exact(const Rational& q, unsigned k);

// a + b*sqrt(d) with a,b rational and d a fixed positive non-square integer.
// A value with b == 0 is d-agnostic and combines with any extension.
struct Quad {
  Rational a, b;
  long d = 2;

  Quad() : a(0), b(0) {}
  Quad(int v) : a(v), b(0) {}
  Quad(const Rational& v) : a(v), b(0) {}
  Quad(Rational av, Rational bv, long dv = 2) : a(std::move(av)), b(std::move(bv)), d(dv) {}

  static Quad sqrt_d(long dv = 2) { return Quad(Rational(0), Rational(1), dv); }

  bool is_rational() const { return b == 0; }

  friend long join_d(const Quad& x, const Quad& y) {
    if (x.b == 0) return y.d;
    if (y.b == 0) return x.d;
    if (x.d != y.d) throw std::invalid_argument("Quad: mixed extensions");
    return x.d;
  }

  Quad operator-() const { return Quad(-a, -b, d); }
  friend Quad operator+(const Quad& x, const Quad& y) {
    return Quad(x.a + y.a, x.b + y.b, join_d(x, y));
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return Quad(x.a - y.a, x.b - y.b, join_d(x, y));
  }
  friend Quad operator*(const Quad& x, const Quad& y) {
    long dd = join_d(x, y);
    return Quad(x.a * y.a + Rational(dd) * x.b * y.b, x.a * y.b + x.b * y.a, dd);
  }
  Quad inv() const {
    Rational n = a * a - Rational(d) * b * b;
    if (n == 0) throw std::domain_error("Quad: division by zero");
    return Quad(a / n, -b / n, d);
  }
  friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inv(); }
  Quad& operator+=(const Quad& y) { return *this = *this + y; }
  Quad& operator-=(const Quad& y) { return *this = *this - y; }
  Quad& operator*=(const Quad& y) { return *this = *this * y; }
  Quad& operator/=(const Quad& y) { return *this = *this / y; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b && (x.b == 0 || y.b == 0 || x.d == y.d);
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  Quad conj_sqrt() const { return Quad(a, -b, d); }  // Galois conjugate a - b*sqrt(d)
};

int sgn(const Quad& q);
inline bool operator<(const Quad& x, const Quad& y) { return sgn(x - y) < 0; }
inline bool operator>(const Quad& x, const Quad& y) { return sgn(x - y) > 0; }
inline double to_double(const Quad& q) { return to_double(q.a) + to_double(q.b) * std::sqrt(double(q.d)); }
std::optional<Quad> sqrt_exact(const Quad& q);
std::string quad_to_string(const Quad& q);

template <class S> struct scalar_traits;
template <> struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_int(long v) { return Rational(v); }
};
template <> struct scalar_traits<Quad> {
  static constexpr bool exact = true;
  static Quad from_int(long v) { return Quad(Rational(v)); }
};
template <> struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_int(long v) { return double(v); }
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Quad& q) { return q.a == 0 && q.b == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline int sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline std::optional<double> sqrt_maybe(double x) {
  if (x < 0) return std::nullopt;
  return std::sqrt(x);
}
inline std::optional<Rational> sqrt_maybe(const Rational& q) { return sqrt_exact(q); }
inline std::optional<Quad> sqrt_maybe(const Quad& q) { return sqrt_exact(q); }

std::string scalar_to_string(const Rational& q);
std::string scalar_to_string(const Quad& q);
std::string scalar_to_string(double x);  // 17 significant digits

// Complex numbers over an exact (or float) scalar; sesquilinear forms conjugate
// the second slot throughout the sl6 module.
template <class S>
struct Cx {
  S re{}, im{};
  Cx() = default;
  Cx(int v) : re(scalar_traits<S>::from_int(v)), im(scalar_traits<S>::from_int(0)) {}
  Cx(S r) : re(std::move(r)), im(scalar_traits<S>::from_int(0)) {}
  Cx(S r, S i) : re(std::move(r)), im(std::move(i)) {}
  static Cx i() { return Cx(scalar_traits<S>::from_int(0), scalar_traits<S>::from_int(1)); }
  Cx conj() const { return Cx(re, -im); }
  Cx operator-() const { return Cx(-re, -im); }
  friend Cx operator+(const Cx& x, const Cx& y) { return Cx(x.re + y.re, x.im + y.im); }
  friend Cx operator-(const Cx& x, const Cx& y) { return Cx(x.re - y.re, x.im - y.im); }
  friend Cx operator*(const Cx& x, const Cx& y) {
    return Cx(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  Cx inv() const {
    S n = re * re + im * im;
    return Cx(re / n, -im / n);
  }
  friend Cx operator/(const Cx& x, const Cx& y) { return x * y.inv(); }
  Cx& operator+=(const Cx& y) { return *this = *this + y; }
  Cx& operator-=(const Cx& y) { return *this = *this - y; }
  Cx& operator*=(const Cx& y) { return *this = *this * y; }
  Cx& operator/=(const Cx& y) { return *this = *this / y; }
  friend bool operator==(const Cx& x, const Cx& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const Cx& x, const Cx& y) { return !(x == y); }
};

// magnitude proxy used for pivot selection in generic elimination
template <class S>
double to_double(const Cx<S>& z) {
  double r = to_double(z.re), i = to_double(z.im);
  return std::sqrt(r * r + i * i);
}

template <class S> inline bool is_zero(const Cx<S>& z) { return is_zero(z.re) && is_zero(z.im); }

template <class S> struct scalar_traits<Cx<S>> {
  static constexpr bool exact = scalar_traits<S>::exact;
  static Cx<S> from_int(long v) { return Cx<S>(scalar_traits<S>::from_int(v)); }
};

// Default absolute tolerance for Float64 comparisons.
inline constexpr double kFloatTol = 1e-9;

}  // namespace hlab
