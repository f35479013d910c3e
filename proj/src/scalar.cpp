#include "hitchinlab/scalar.hpp"

#include <cstdio>

namespace hlab {

std::string rat_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational rat_from_string(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
  }
  // decimal string: sign? digits '.' digits
  std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
  bool neg = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
  if (head.empty()) head = "0";
  for (char c : head + tail)
    if (!isdigit(c)) throw std::invalid_argument("bad decimal: " + s);
  mpz_class num;
  if (mpz_set_str(num.get_mpz_t(), (head + tail).c_str(), 10) != 0)
    throw std::invalid_argument("bad decimal: " + s);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::optional<Rational> sqrt_exact(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rational(0);
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
  }
  return std::nullopt;
}

std::optional<Rational> kth_root_exact(const Rational& q, unsigned k) {
  if (q == 0) return Rational(0);
  if (q < 0 && k % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num()), den = q.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
  Rational r(rn, rd);
  return q < 0 ? Rational(-r) : r;
}

int sgn(const Quad& q) {
  int sa = sgn(q.a), sb = sgn(q.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) compete: compare a^2 with d*b^2
  int c = cmp(q.a * q.a, Rational(q.d) * q.b * q.b);
  if (c == 0) return 0;  // cannot happen for non-square d, kept for safety
  return c > 0 ? sa : sb;
}

std::optional<Quad> sqrt_exact(const Quad& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (q.b == 0) {
    if (auto r = sqrt_exact(q.a)) return Quad(*r, Rational(0), q.d);
    // sqrt(a) = y*sqrt(d) with y^2 = a/d
    if (auto y = sqrt_exact(q.a / Rational(q.d))) return Quad(Rational(0), *y, q.d);
    return std::nullopt;
  }
  // (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 + d y^2 = a, 2 x y = b
  // x^2 is a root of t^2 - a t + d b^2 / 4.
  Rational disc = q.a * q.a - Rational(q.d) * q.b * q.b;
  auto s = sqrt_exact(disc);
  if (!s) return std::nullopt;
  for (int pm : {1, -1}) {
    Rational x2 = (q.a + Rational(pm) * (*s)) / 2;
    if (x2 < 0) continue;
    if (auto x = sqrt_exact(x2)) {
      if (*x == 0) continue;
      Rational y = q.b / (2 * (*x));
      Quad r(*x, y, q.d);
      if (sgn(r) < 0) r = -r;
      if (r * r == q) return r;
    }
  }
  return std::nullopt;
}

std::string quad_to_string(const Quad& q) {
  if (q.b == 0) return rat_to_string(q.a);
  std::string out;
  if (q.a != 0) out += rat_to_string(q.a);
  if (q.b > 0 && q.a != 0) out += "+";
  if (q.b == -1)
    out += "-";
  else if (q.b != 1)
    out += rat_to_string(q.b) + "*";
  out += "sqrt" + std::to_string(q.d);
  return out;
}

std::string scalar_to_string(const Rational& q) { return rat_to_string(q); }
std::string scalar_to_string(const Quad& q) { return quad_to_string(q); }
std::string scalar_to_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace hlab
