#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hitchinlab/exterior.hpp"
#include "hitchinlab/io.hpp"

using namespace hlab;

namespace {

KForm<Rational> rat(const std::string& lit, int n = 0) {
  return form_to_rational(parse_form(lit, n));
}

std::mt19937_64 rng(20260808);

KForm<Rational> random_form(int n, int k, int span = 5) {
  KForm<Rational> f(n, k);
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  for (auto& c : f.c) c = ratq(num(rng), den(rng));
  return f;
}

std::vector<Rational> random_vector(int n, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(num(rng));
  return v;
}

Matrix<Rational> random_matrix(int n, bool invertible) {
  std::uniform_int_distribution<int> num(-3, 3);
  while (true) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng));
    if (!invertible || !is_zero(determinant(m))) return m;
  }
}

}  // namespace

TEST_CASE("form literal parser") {
  auto f = rat("e135 - e146 - e236 - e245");
  CHECK(f.n == 6);
  CHECK(f.k == 3);
  CHECK(f.at_mask(0b010101) == 1);
  CHECK(f.at_mask(0b101001) == -1);
  // written order carries signs: e31 = -e13
  CHECK(rat("e31", 6) == rat("e13", 6) * Rational(-1));
  // f letters live at slots 4..6
  CHECK(rat("f12").at_mask(0b011000) == 1);
  auto q = parse_form("1/2*e12 + sqrt2 e13 - (1+1/2*sqrt2)e23");
  CHECK(q.at_mask(0b011).a == Rational(1, 2));
  CHECK(q.at_mask(0b101).b == Rational(1));
  CHECK(q.at_mask(0b110).a == Rational(-1));
  CHECK(q.at_mask(0b110).b == Rational(-1, 2));
  // JSON round trip
  auto j = form_to_json(f);
  CHECK(form_to_rational(form_from_json(j)) == f);
}

TEST_CASE("wedge basics") {
  CHECK(wedge(rat("e1", 6), rat("e2", 6)) == rat("e12", 6));
  // odd-degree forms square to zero; the cross terms cancel
  auto r = rat("e123+e456", 6);
  CHECK(wedge(r, r).is_zero_form());
  // while the dual pairing picks them up with the same sign
  CHECK(wedge(rat("e123-e456", 6), r) == rat("e123456", 6) * Rational(2));
  // graded anticommutativity on random forms
  for (int t = 0; t < 50; ++t) {
    int n = 6;
    int k = 1 + int(rng() % 3), l = 1 + int(rng() % 3);
    if (k + l > n) continue;
    auto a = random_form(n, k), b = random_form(n, l);
    auto ab = wedge(a, b), ba = wedge(b, a);
    if ((k * l) % 2 == 1) {
      CHECK((ab + ba).is_zero_form());
    } else {
      CHECK((ab - ba).is_zero_form());
    }
  }
  // associativity
  for (int t = 0; t < 20; ++t) {
    auto a = random_form(6, 1), b = random_form(6, 2), c = random_form(6, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("interior product") {
  CHECK(interior(0, rat("e12", 6)) == rat("e2", 6));
  // antiderivation: v |_ (a ^ b) = (v |_ a) ^ b + (-1)^deg a a ^ (v |_ b)
  for (int t = 0; t < 100; ++t) {
    auto a = random_form(6, 2), b = random_form(6, 2);
    auto v = random_vector(6);
    auto lhs = interior(v, wedge(a, b));
    auto rhs = wedge(interior(v, a), b) + wedge(a, interior(v, b));
    CHECK((lhs - rhs).is_zero_form());
  }
  CHECK_THROWS_AS(interior(0, rat("1", 6)), MathError);
}

TEST_CASE("kappa duality") {
  Orientation<Rational> lex{6, Rational(1)};
  // kappa((e1 |_ rho-) ^ rho-) = -e2 (x) nu, matching J e1 = -e2
  auto rho_m = rat("e135-e146-e236-e245");
  auto w = kappa_dual(wedge(interior(0, rho_m), rho_m), lex);
  CHECK(w.k == 1);
  CHECK(w.c[1] == Rational(-2));
  for (int i = 0; i < 6; ++i)
    if (i != 1) CHECK(w.c[i] == 0);
  // round trip on random forms of every degree
  for (int k = 0; k <= 6; ++k) {
    auto a = random_form(6, k);
    CHECK(kappa_dual_inv(kappa_dual(a, lex), lex) == a);
  }
}

TEST_CASE("pullback functoriality and det scaling") {
  auto a = random_matrix(6, true), b = random_matrix(6, true);
  auto f = random_form(6, 3);
  // (AB)^* = B^* A^*
  CHECK(pullback(a * b, f) == pullback(b, pullback(a, f)));
  // top degree scales by det
  auto top = rat("e123456", 6);
  CHECK(pullback(a, top) == top * determinant(a));
  // diag(s) on 3-forms scales by s^3
  Matrix<Rational> s(6, 6);
  for (int i = 0; i < 6; ++i) s(i, i) = Rational(3);
  CHECK(pullback(s, f) == f * Rational(27));
  // identity
  CHECK(pullback(Matrix<Rational>::identity(6), f) == f);
}

TEST_CASE("hodge star") {
  Orientation<Rational> lex{6, Rational(1)};
  Matrix<Rational> id = Matrix<Rational>::identity(6);
  // *1 = vol
  CHECK(hodge_star(rat("1", 6), id, lex) == rat("e123456", 6));
  // euclidean normal form: *omega = omega^2/2
  auto om = rat("e12+e34+e56", 6);
  CHECK(hodge_star(om, id, lex) == wedge(om, om) * Rational(1, 2));
  // ** = (-1)^{k(n-k)} sign(det g), indefinite metrics included
  for (int t = 0; t < 30; ++t) {
    Matrix<Rational> g(6, 6);
    std::vector<int> signs(6);
    for (int i = 0; i < 6; ++i) {
      signs[i] = (rng() % 2) ? 1 : -1;
      g(i, i) = Rational(signs[i]);
    }
    int detsign = 1;
    for (int i = 0; i < 6; ++i) detsign *= signs[i];
    int k = int(rng() % 4);
    auto f = random_form(6, k);
    auto ss = hodge_star(hodge_star(f, g, lex), g, lex);
    int expect = detsign * (((k * (6 - k)) % 2) ? -1 : 1);
    CHECK(ss == f * Rational(expect));
  }
  // alpha ^ *beta = <alpha,beta> vol on random pairs, diag(1,1,1,-1,-1,-1)
  Matrix<Rational> eta(6, 6);
  for (int i = 0; i < 6; ++i) eta(i, i) = Rational(i < 3 ? 1 : -1);
  for (int t = 0; t < 20; ++t) {
    auto al = random_form(6, 2), be = random_form(6, 2);
    auto lhs = wedge(al, hodge_star(be, eta, lex));
    // <alpha, beta> with inverse metric Gram determinants
    Matrix<Rational> ginv = inverse(eta);
    Rational inner(0);
    const auto& masks = basis_masks(6, 2);
    for (size_t i = 0; i < masks.size(); ++i)
      for (size_t j = 0; j < masks.size(); ++j) {
        if (is_zero(al.c[i]) || is_zero(be.c[j])) continue;
        std::vector<int> si, sj;
        for (int b2 = 0; b2 < 6; ++b2) {
          if (masks[i] >> b2 & 1) si.push_back(b2);
          if (masks[j] >> b2 & 1) sj.push_back(b2);
        }
        Matrix<Rational> gram(2, 2);
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y) gram(x, y) = ginv(si[x], sj[y]);
        inner += al.c[i] * be.c[j] * determinant(gram);
      }
    CHECK(top_coeff(lhs) == inner);
  }
  // degenerate metric is rejected
  Matrix<Rational> bad(6, 6);
  CHECK_THROWS_AS(hodge_star(om, bad, lex), MathError);
}

TEST_CASE("inertia and nullspace") {
  Matrix<Rational> g(3, 3);
  g(0, 1) = g(1, 0) = Rational(1);  // hyperbolic plane: (1,1)
  g(2, 2) = Rational(-2);
  auto in = inertia_sym(g);
  CHECK(in.pos == 1);
  CHECK(in.neg == 2);
  CHECK(in.zero == 0);
  Matrix<Rational> m(2, 4);
  m(0, 0) = 1, m(0, 1) = 2, m(1, 2) = 1, m(1, 3) = -1;
  auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (auto& v : ns) {
    auto img = m.apply(v);
    for (auto& x : img) CHECK(x == 0);
  }
}
