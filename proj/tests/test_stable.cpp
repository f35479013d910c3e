#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hitchinlab/io.hpp"
#include "hitchinlab/liealg.hpp"
#include "hitchinlab/stable.hpp"

using namespace hlab;

namespace {

std::mt19937_64 rng(42);

KForm<Rational> rat(const std::string& lit, int n = 0) {
  return form_to_rational(parse_form(lit, n));
}

// rho_eps = e135 + eps(e146 + e236 + e245), lambda = 4 eps
KForm<Rational> rho_eps(int eps) {
  return rat("e135", 6) + (rat("e146", 6) + rat("e236", 6) + rat("e245", 6)) * Rational(eps);
}
// omega = tau(e12 + e34) + e56
KForm<Rational> omega_normal(int tau) {
  return (rat("e12", 6) + rat("e34", 6)) * Rational(tau) + rat("e56", 6);
}

Matrix<Rational> random_glp(int n) {
  std::uniform_int_distribution<int> num(-3, 3);
  while (true) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng));
    Rational d = determinant(m);
    if (sgn(d) > 0) return m;
  }
}

// random stable exact three-form with exact phi: pullback of a normal form
KForm<Rational> random_stable(int eps, Matrix<Rational>* used = nullptr) {
  Matrix<Rational> a = random_glp(6);
  if (used) *used = a;
  return pullback(a, rho_eps(eps));
}

const Orientation<Rational> lex{6, Rational(1)};

}  // namespace

TEST_CASE("quartic invariant on the open orbits") {
  CHECK(lambda3(rat("e123+e456", 6), lex) == Rational(1));
  CHECK(lambda3(rat("e135-e146-e236-e245"), lex) == Rational(-4));
  CHECK(lambda3(rho_eps(1), lex) == Rational(4));
  CHECK(lambda3(rho_eps(-1), lex) == Rational(-4));
  // degenerate: decomposable forms are not stable
  CHECK(lambda3(rat("e123", 6), lex) == Rational(0));
  CHECK_THROWS_AS(j_and_dual(rat("e123", 6), lex), MathError);
  // orientation units: lambda in nu^{(x)2} units scales by 1/top^2
  Orientation<Rational> half{6, Rational(2)};
  CHECK(lambda3(rho_eps(1), half) == Rational(1));
}

TEST_CASE("J action and duals in the normal form") {
  for (int eps : {1, -1}) {
    auto cls = j_and_dual(rho_eps(eps), lex);
    CHECK(cls.epsilon == eps);
    CHECK(cls.lambda == Rational(4 * eps));
    CHECK(cls.phi_vol == Rational(2));
    // J e_i = eps e_{i+1}, J e_{i+1} = e_i for i in {1,3,5} (1-based)
    for (int i : {0, 2, 4}) {
      for (int r = 0; r < 6; ++r) {
        CHECK(cls.J(r, i) == (r == i + 1 ? Rational(eps) : Rational(0)));
        CHECK(cls.J(r, i + 1) == (r == i ? Rational(1) : Rational(0)));
      }
    }
    // J^2 = eps id
    Matrix<Rational> j2 = cls.J * cls.J;
    CHECK(j2 == Matrix<Rational>::identity(6) * Rational(eps));
    // rho_hat = e246 + eps(e235 + e145 + e136)
    auto expect =
        rat("e246", 6) + (rat("e235", 6) + rat("e145", 6) + rat("e136", 6)) * Rational(eps);
    CHECK(cls.dual == expect);
    // Euler identity: rho_hat ^ rho = 2 phi(rho)
    CHECK(top_coeff(wedge(cls.dual, rho_eps(eps))) == Rational(2) * cls.phi_vol);
    // lambda(rho + t J* rho) = 4 eps (-eps + t^2)^2
    for (int t : {0, 1, 2}) {
      auto rt = rho_eps(eps) + cls.dual * Rational(t);
      Rational want = Rational(4 * eps) * Rational(t * t - eps) * Rational(t * t - eps);
      CHECK(lambda3(rt, lex) == want);
    }
  }
  SUBCASE("for the lambda > 0 representative e123+e456") {
    auto cls = j_and_dual(rat("e123+e456", 6), lex);
    for (int i = 0; i < 6; ++i)
      CHECK(cls.J(i, i) == Rational(i < 3 ? 1 : -1));
    CHECK(cls.dual == rat("e123-e456", 6));
  }
}

TEST_CASE("hat of hat is minus the form") {
  for (int eps : {1, -1})
    for (int t = 0; t < 25; ++t) {
      auto rho = random_stable(eps);
      auto cls = j_and_dual(rho, lex);
      auto cls2 = j_and_dual(cls.dual, lex);
      CHECK(cls2.dual == -rho);
      // J_{rho_hat} = -eps J_rho
      CHECK(cls2.J == cls.J * Rational(-eps));
    }
}

TEST_CASE("homogeneity and equivariance") {
  for (int eps : {1, -1}) {
    auto rho = random_stable(eps);
    for (int t : {2, 3}) {
      CHECK(lambda3(rho * Rational(t), lex) == lambda3(rho, lex) * Rational(t * t * t * t));
      auto c1 = j_and_dual(rho, lex), c2 = j_and_dual(rho * Rational(t), lex);
      CHECK(c2.phi_vol == c1.phi_vol * Rational(t * t));
      CHECK(c2.dual == c1.dual * Rational(t));  // hat is homogeneous of degree 1
    }
    // lambda(A^* rho) = det(A)^2 lambda(rho), J_{A^* rho} = A^{-1} J A
    Matrix<Rational> a = random_glp(6);
    auto pull = pullback(a, rho);
    Rational d = determinant(a);
    CHECK(lambda3(pull, lex) == d * d * lambda3(rho, lex));
    auto c1 = j_and_dual(rho, lex);
    if (auto c2 = [&]() -> std::optional<StableClass3D6<Rational>> {
          try {
            return j_and_dual(pull, lex);
          } catch (const MathError&) {
            return std::nullopt;
          }
        }()) {
      CHECK(c2->J == inverse(a) * c1.J * a);
    }
  }
}

TEST_CASE("interior-product identity of the dual (formel1)") {
  for (int t = 0; t < 20; ++t) {
    int eps = (t % 2) ? 1 : -1;
    auto rho = random_stable(eps);
    auto cls = j_and_dual(rho, lex);
    for (int x = 0; x < 6; ++x) {
      auto lhs = wedge(interior(x, cls.dual), rho);
      auto rhs = wedge(cls.dual, interior(x, rho));
      CHECK((lhs + rhs).is_zero_form());
    }
  }
}

TEST_CASE("decompositions") {
  Orientation<Rational> o = lex;
  auto d1 = decompose(rat("e123+e456", 6), o);
  CHECK(!d1.complex_pair);
  CHECK(d1.alpha == rat("e123", 6));
  CHECK(d1.beta == rat("e456", 6));
  // alpha ^ beta > 0
  CHECK(sgn(top_coeff(wedge(d1.alpha, d1.beta))) > 0);

  auto rm = rat("e135-e146-e236-e245");
  auto d2 = decompose(rm, o);
  CHECK(d2.complex_pair);
  CHECK(d2.alpha == rm * Rational(1, 2));
  auto hat = j_and_dual(rm, o).dual;
  CHECK(d2.beta == hat * Rational(1, 2));

  // Pluecker decomposability of the outputs
  for (int t = 0; t < 10; ++t) {
    auto rho = random_stable(1);
    auto d = decompose(rho, o);
    CHECK(is_decomposable3(d.alpha));
    CHECK(is_decomposable3(d.beta));
    CHECK((d.alpha + d.beta) == rho);
  }
  for (int t = 0; t < 10; ++t) {
    auto rho = random_stable(-1);
    auto d = decompose(rho, o);
    // alpha + i beta decomposable over C: real Pluecker system on both parts
    // (v |_ a)^a - (v |_ b)^b = 0 and (v |_ a)^b + (v |_ b)^a = 0
    for (int v = 0; v < 6; ++v) {
      auto re = wedge(interior(v, d.alpha), d.alpha) - wedge(interior(v, d.beta), d.beta);
      auto im = wedge(interior(v, d.alpha), d.beta) + wedge(interior(v, d.beta), d.alpha);
      CHECK(re.is_zero_form());
      CHECK(im.is_zero_form());
    }
    CHECK((d.alpha * Rational(2)) == rho);
  }
}

TEST_CASE("pair analysis of the unified normal forms") {
  struct Row {
    int eps, tau;
    Inertia sig;
    const char* label;
  };
  const Row rows[] = {{-1, 1, {6, 0, 0}, "SU(3)"},
                      {-1, -1, {2, 4, 0}, "SU(1,2)"},
                      {1, 1, {3, 3, 0}, "SL(3,R)"}};
  for (const auto& r : rows) {
    auto pair = pair_analyze(omega_normal(r.tau), rho_eps(r.eps), lex);
    CHECK(pair.epsilon == r.eps);
    CHECK(pair.tau == r.tau);
    CHECK(pair.signature.pos == r.sig.pos);
    CHECK(pair.signature.neg == r.sig.neg);
    CHECK(pair.label == r.label);
    CHECK(pair.normalized);
    // diagonal metric (tau, -eps tau, tau, -eps tau, 1, -eps)
    int want[6] = {r.tau, -r.eps * r.tau, r.tau, -r.eps * r.tau, 1, -r.eps};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        CHECK(pair.metric(i, j) == (i == j ? Rational(want[i]) : Rational(0)));
    // g(J., J.) = -eps g
    Matrix<Rational> gj = pair.J.transposed() * pair.metric * pair.J;
    CHECK(gj == pair.metric * Rational(-r.eps));
  }
  CHECK_THROWS_AS(pair_analyze(omega_normal(1), rat("e125", 6) + rat("e345", 6), lex), MathError);
}

TEST_CASE("pair analysis of the three H3xH3 examples") {
  using QF = KForm<Quad>;
  Quad s(Rational(0), Rational(1, 2), 2);  // 1/sqrt2 = sqrt2/2
  Quad r2 = Quad::sqrt_d(2);
  auto gens = rho1_generators<Quad>();
  auto mk = [&](std::array<int, 9> coef, Quad scale) {
    std::array<Quad, 9> a;
    for (int i = 0; i < 9; ++i) a[i] = Quad(Rational(coef[i])) * scale;
    return rho1_family<Quad>(a);
  };
  QF ex1 = mk({1, -1, -1, 1, 1, -1, 0, 1, 0}, s);
  QF ex2 = mk({1, -1, -1, -1, 1, 1, 0, -1, 0}, s);
  QF ex3 = mk({1, 1, 0, 0, 0, 0, 0, 0, 0}, r2);
  // cross-check the parametrisation against the printed literals
  CHECK(ex1 == parse_form("e123 - f123 - e1f23 + e23f1 - e2f31 + e31f2 - e3f12 + e12f3") * s);
  CHECK(ex2 == parse_form("e123 - f123 - e1f23 + e23f1 + e2f31 - e31f2 + e3f12 - e12f3") * s);
  CHECK(ex3 == parse_form("e123 + f123") * r2);

  KForm<Quad> om(6, 2);
  {
    auto o1 = omega_normal_form<Quad>(1);
    om = o1;
  }
  Orientation<Quad> lexq{6, Quad(1)};
  auto L = h3h3<Quad>();

  auto p1 = pair_analyze(om, ex1, lexq);
  CHECK(p1.epsilon == -1);
  CHECK(p1.label == "SU(3)");
  CHECK(p1.normalized);
  // the standard basis is orthonormal
  CHECK(p1.metric == Matrix<Quad>::identity(6));
  CHECK(L.d(ex1).is_zero_form());

  auto p2 = pair_analyze(om, ex2, lexq);
  CHECK(p2.label == "SU(1,2)");
  CHECK(p2.normalized);
  // pseudo-orthonormal with e1 and e4 spacelike
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(p2.metric(i, j) == (i == j ? Quad(Rational(i == 0 || i == 3 ? 1 : -1)) : Quad(0)));
  CHECK(L.d(ex2).is_zero_form());

  auto p3 = pair_analyze(om, ex3, lexq);
  CHECK(p3.label == "SL(3,R)");
  CHECK(p3.normalized);
  // g = 2(e1.e4 + e2.e5 + e3.e6)
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(p3.metric(i, j) == ((i + 3 == j || j + 3 == i) ? Quad(1) : Quad(0)));
  CHECK(L.d(ex3).is_zero_form());
}

TEST_CASE("seven-dimensional structures from pairs") {
  for (auto [eps, tau] : {std::pair{-1, 1}, {-1, -1}, {1, 1}}) {
    auto pair = pair_analyze(omega_normal(tau), rho_eps(eps), lex);
    auto g2 = lift_to_7(pair, Rational(1));
    // b_phi diagonal (-eps tau, tau, -eps tau, tau, -eps, 1, 1)
    int wantb[7] = {-eps * tau, tau, -eps * tau, tau, -eps, 1, 1};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        CHECK(g2.b(i, j) == (i == j ? Rational(wantb[i]) : Rational(0)));
    // phi(phi) = -eps e^{1..7}
    CHECK(g2.vol == Rational(-eps));
    // metric signature (tau, -eps tau, tau, -eps tau, 1, -eps, -eps)
    int wantg[7] = {tau, -eps * tau, tau, -eps * tau, 1, -eps, -eps};
    for (int i = 0; i < 7; ++i) CHECK(g2.g(i, i) == Rational(wantg[i]));
    CHECK(g2.label == ((eps == -1 && tau == 1) ? "G2" : "G2*"));
    // g_phi(phi, phi) = 7: via the identity phi ^ *phi = 7 phi(phi)
    CHECK(top_coeff(wedge(g2.phi, g2.star_phi)) == Rational(7) * g2.vol);
    // the printed Hodge dual
    auto star = (rat("e3456", 7) + rat("e1256", 7)) * Rational(-eps * tau) +
                rat("e1234", 7) * Rational(-eps) + rat("e2467", 7) * Rational(eps) +
                rat("e2357", 7) + rat("e1457", 7) + rat("e1367", 7);
    CHECK(g2.star_phi == star);
    // 3 phi_hat = *phi = -eps(alpha ^ rho_hat + omega_hat)
    auto rho_hat = j_and_dual(rho_eps(eps), lex).dual;
    KForm<Rational> alpha = basis_form<Rational>(7, 1 << 6);
    auto omega7 = [&](const KForm<Rational>& f) {
      KForm<Rational> r(7, f.k);
      for (auto m : basis_masks(6, f.k)) r.at_mask(m) = f.at_mask(m);
      return r;
    };
    auto rhs = (wedge(alpha, omega7(rho_hat)) +
                wedge(omega7(omega_normal(tau)), omega7(omega_normal(tau))) * Rational(1, 2)) *
               Rational(-eps);
    CHECK(g2.star_phi == rhs);
    // interior example: e7 |_ phi = omega
    CHECK(interior(6, g2.phi) == omega7(omega_normal(tau)));

    // restriction with n = e7 recovers the pair
    std::vector<Rational> n7(7, Rational(0));
    n7[6] = Rational(1);
    auto back = restrict_to_6(g2, n7);
    CHECK(back.epsilon == eps);
    CHECK(back.pair.omega == omega_normal(tau));
    CHECK(back.pair.rho == rho_eps(eps));
    CHECK(back.pair.label == pair.label);
    // metric of the restricted pair equals g_phi on W
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(back.pair.metric(i, j) == g2.g(i, j));
    // J via the cross product: J v = -n x v
    for (int i = 0; i < 6; ++i) {
      std::vector<Rational> v(7, Rational(0));
      v[i] = Rational(1);
      auto nx = cross_product(g2, n7, v);
      for (int r = 0; r < 6; ++r) CHECK(back.pair.J(r, i) == -nx[r]);
      CHECK(nx[6] == Rational(0));
    }

    // dimension eight
    auto sp = lift_to_8(g2);
    CHECK(sp.label == ((eps == -1 && tau == 1) ? "Spin(7)" : "Spin0(3,4)"));
    if (eps == -1 && tau == 1) {
      CHECK(sp.signature.pos == 8);
    } else {
      CHECK(sp.signature.pos == 4);
      CHECK(sp.signature.neg == 4);
    }
    auto g2back = restrict_to_7(sp);
    CHECK(g2back.phi == g2.phi);
  }
}

TEST_CASE("cross-product J for random unit normals") {
  // J of the restricted pair equals v -> -(n x v) for 50 random unit normals
  std::mt19937_64 gen(314);
  std::uniform_real_distribution<double> u(-1, 1);
  auto pair = pair_analyze(omega_normal(1), rho_eps(-1), lex);
  auto g2q = lift_to_7(pair, Rational(1));
  // float copy of the positive-definite structure
  auto g2 = g2_structure(to_float(g2q.phi));
  int done = 0;
  while (done < 50) {
    std::vector<double> n(7);
    double nn = 0;
    for (int i = 0; i < 7; ++i) n[size_t(i)] = u(gen);
    std::vector<double> gn = g2.g.apply(n);
    for (int i = 0; i < 7; ++i) nn += gn[size_t(i)] * n[size_t(i)];
    if (nn < 0.1) continue;
    for (auto& x : n) x /= std::sqrt(nn);
    auto res = restrict_to_6(g2, n, PairOptions{1e-9});
    ++done;
    // w-basis vectors in ambient coordinates are the first 6 columns
    for (int j = 0; j < 6; ++j) {
      std::vector<double> w(7);
      for (int i = 0; i < 7; ++i) w[size_t(i)] = res.basis(i, j);
      auto nx = cross_product(g2, n, w);
      // -(n x w) expressed in the adapted basis must match column j of J
      Matrix<double> binv = inverse(res.basis);
      std::vector<double> coords = binv.apply(nx);
      for (int r = 0; r < 6; ++r)
        CHECK(res.pair.J(r, j) == doctest::Approx(-coords[size_t(r)]).epsilon(1e-8));
      CHECK(std::fabs(coords[6]) < 1e-9);  // n x w stays tangent to W
    }
  }
}

TEST_CASE("lift with a non-unit one-form scale") {
  auto pair = pair_analyze(omega_normal(1), rho_eps(-1), lex);
  auto g2 = lift_to_7(pair, Rational(3));
  // g_phi = h - eps alpha . alpha: the e7 diagonal entry picks up the square
  CHECK(g2.g(6, 6) == Rational(9));
  for (int i = 0; i < 6; ++i) CHECK(g2.g(i, i) == pair.metric(i, i));
  CHECK(g2.label == "G2");
}

TEST_CASE("wedge injectivity on stable phi") {
  auto pair = pair_analyze(omega_normal(1), rho_eps(-1), lex);
  auto g2 = lift_to_7(pair, Rational(1));
  CHECK(wedge_injectivity_check(g2.phi, KForm<Rational>(7, 2)));
  CHECK(!wedge_injectivity_check(g2.phi, rat("e12", 7)));
  CHECK(!wedge_injectivity_check(g2.phi, rat("e1", 7)));
  CHECK(wedge_phi_rank2(g2.phi) == 21);
}

TEST_CASE("square root of a stable four-form") {
  auto o1 = rat("e1f1+e2f2+e3f3");
  auto sigma = wedge(o1, o1) * Rational(1, 2);
  // omega1^3 is negative in the lexicographic orientation
  Orientation<Rational> neg{6, Rational(-1)};
  CHECK(sqrt_four_form(sigma, neg) == o1);
  CHECK(sqrt_four_form(sigma, lex) == -o1);
  // sigma_0 + y e12f12 with y = 3/4: sqrt(1-y) = 1/2
  auto sigma_y = sigma + rat("e12f12") * Rational(3, 4);
  auto want = (rat("e1f1") + rat("e2f2")) * Rational(1, 2) + rat("e3f3") * Rational(2);
  CHECK(sqrt_four_form(sigma_y, neg) == want);
  // equivariance: sqrt(A^*(sigma)) = +- A^* omega1, fixed by orientation
  for (int t = 0; t < 10; ++t) {
    auto a = random_glp(6);
    auto p = pullback(a, sigma);
    auto w = sqrt_four_form(p, neg);
    auto aw = pullback(a, o1);
    bool plus = (w == aw), minus = (w == -aw);
    CHECK((plus || minus));
    CHECK(sgn(top_coeff(wedge(w, wedge(w, w)))) < 0);
  }
  // errors: non-square and no real root
  CHECK_THROWS_AS(sqrt_four_form(rat("e1234", 6), lex), MathError);
  CHECK_THROWS_AS(sqrt_four_form(-sigma, lex), MathError);
  // dual two-form: sigma_hat = omega/2
  CHECK(four_form_dual(sigma, neg) == o1 * Rational(1, 2));
}
