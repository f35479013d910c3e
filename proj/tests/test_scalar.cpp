#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hitchinlab/polynomial.hpp"
#include "hitchinlab/scalar.hpp"

using namespace hlab;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_from_string("3/4") == Rational(3, 4));
  CHECK(rat_from_string("-7") == Rational(-7));
  CHECK(rat_from_string("0.25") == Rational(1, 4));
  CHECK(rat_from_string("-1.5") == Rational(-3, 2));
  CHECK(rat_to_string(Rational(22, 8)) == "11/4");
  CHECK(ratq(22, 8) == Rational(11, 4));
}

TEST_CASE("exact square roots") {
  CHECK(*sqrt_exact(Rational(9, 4)) == Rational(3, 2));
  CHECK(!sqrt_exact(Rational(2)).has_value());
  CHECK(!sqrt_exact(Rational(-4)).has_value());
  CHECK(*kth_root_exact(Rational(512), 9) == Rational(2));
  CHECK(*kth_root_exact(Rational(-1), 9) == Rational(-1));
}

TEST_CASE("quadratic extension arithmetic") {
  Quad r2 = Quad::sqrt_d(2);
  CHECK(r2 * r2 == Quad(2));
  Quad x(Rational(1), Rational(2), 2);  // 1 + 2 sqrt2
  Quad inv = x.inv();
  CHECK(x * inv == Quad(1));
  CHECK(sgn(Quad(Rational(-3), Rational(2), 2)) < 0);   // -3 + 2 sqrt2 < 0
  CHECK(sgn(Quad(Rational(-1), Rational(1), 2)) > 0);   // sqrt2 - 1 > 0
  CHECK(sgn(Quad(Rational(3), Rational(-2), 2)) > 0);   // 3 - 2 sqrt2 > 0
  SUBCASE("sqrt in the extension") {
    // sqrt(6 + 4 sqrt2) = 2 + sqrt2
    Quad v(Rational(6), Rational(4), 2);
    auto s = sqrt_exact(v);
    REQUIRE(s.has_value());
    CHECK(*s * *s == v);
    CHECK(*s == Quad(Rational(2), Rational(1), 2));
    // sqrt(2) = 0 + 1*sqrt2
    auto s2 = sqrt_exact(Quad(Rational(2)));
    REQUIRE(s2.has_value());
    CHECK(*s2 == Quad::sqrt_d(2));
    CHECK(!sqrt_exact(Quad(Rational(3), Rational(1), 2)).has_value());
  }
}

TEST_CASE("sturm root counting") {
  // (x - sqrt2)^3 (x + sqrt2) over Q(sqrt2)
  Quad r2 = Quad::sqrt_d(2);
  Poly<Quad> lin_m({-r2, Quad(1)});
  Poly<Quad> lin_p({r2, Quad(1)});
  Poly<Quad> p = lin_m * lin_m * lin_m * lin_p;
  CHECK(p.degree() == 4);
  CHECK(count_real_roots(p) == 2);
  CHECK(count_roots(p, Quad(-1), Quad(1)) == 0);  // no root inside (-1, 1]
  CHECK(count_roots(p, Quad(0), Quad(2)) == 1);   // sqrt2 in (0, 2]
  // (2 + x^2)^2 has no real roots
  Poly<Quad> q({Quad(2), Quad(0), Quad(1)});
  CHECK(count_real_roots(q * q) == 0);
}

TEST_CASE("float roots") {
  // roots of x^4 - 5x^2 + 4 = (x-1)(x+1)(x-2)(x+2)
  auto r = real_roots({4, 0, -5, 0, 1});
  REQUIRE(r.size() == 4);
  CHECK(r[0] == doctest::Approx(-2));
  CHECK(r[1] == doctest::Approx(-1));
  CHECK(r[2] == doctest::Approx(1));
  CHECK(r[3] == doctest::Approx(2));
}
