#include "hitchinlab/liealg.hpp"

#include <sstream>

#include "hitchinlab/io.hpp"

namespace hlab {

namespace {

template <class S>
S one() {
  return scalar_traits<S>::from_int(1);
}
template <class S>
S zero() {
  return scalar_traits<S>::from_int(0);
}

// Substitution matrix of the automorphism-group shape: rows are the images of
// (e1, e2, e3, f1, f2, f3); the e3/f3 rows carry det A and det B.
template <class S>
Matrix<S> aut_matrix(const std::array<S, 7>& a, const std::array<S, 7>& b, const S& c1, const S& c2,
                     const S& d1, const S& d2) {
  Matrix<S> t(6, 6);
  S detA = a[1] * a[4] - a[2] * a[3];
  S detB = b[1] * b[4] - b[2] * b[3];
  t(0, 0) = a[1], t(0, 1) = a[2];
  t(1, 0) = a[3], t(1, 1) = a[4];
  t(2, 0) = a[5], t(2, 1) = a[6], t(2, 2) = detA, t(2, 3) = c1, t(2, 4) = c2;
  t(3, 3) = b[1], t(3, 4) = b[2];
  t(4, 3) = b[3], t(4, 4) = b[4];
  t(5, 0) = d1, t(5, 1) = d2, t(5, 3) = b[5], t(5, 4) = b[6], t(5, 5) = detB;
  return t;
}

template <class S>
Matrix<S> aut_identity() {
  std::array<S, 7> a{zero<S>(), one<S>(), zero<S>(), zero<S>(), one<S>(), zero<S>(), zero<S>()};
  return aut_matrix<S>(a, a, zero<S>(), zero<S>(), zero<S>(), zero<S>());
}

// exchange the two Heisenberg summands: e^i <-> f^i
template <class S>
Matrix<S> swap_summands() {
  Matrix<S> t(6, 6);
  for (int i = 0; i < 3; ++i) t(i, i + 3) = one<S>(), t(i + 3, i) = one<S>();
  return t;
}

// exchange e1 <-> e2 (A = antidiagonal, det -1)
template <class S>
Matrix<S> swap_e12() {
  std::array<S, 7> a{zero<S>(), zero<S>(), one<S>(), one<S>(), zero<S>(), zero<S>(), zero<S>()};
  std::array<S, 7> b{zero<S>(), one<S>(), zero<S>(), zero<S>(), one<S>(), zero<S>(), zero<S>()};
  return aut_matrix<S>(a, b, zero<S>(), zero<S>(), zero<S>(), zero<S>());
}

template <class S>
Matrix<S> swap_f12() {
  std::array<S, 7> a{zero<S>(), one<S>(), zero<S>(), zero<S>(), one<S>(), zero<S>(), zero<S>()};
  std::array<S, 7> b{zero<S>(), zero<S>(), one<S>(), one<S>(), zero<S>(), zero<S>(), zero<S>()};
  return aut_matrix<S>(a, b, zero<S>(), zero<S>(), zero<S>(), zero<S>());
}

// A-side shear with the given a4 (a1 = 1, a2 = 1): used by the "we can
// achieve" steps of the orbit lemma proof.
template <class S>
Matrix<S> shear_e(const S& a4) {
  std::array<S, 7> a{zero<S>(), one<S>(), one<S>(), zero<S>(), a4, zero<S>(), zero<S>()};
  std::array<S, 7> b{zero<S>(), one<S>(), zero<S>(), zero<S>(), one<S>(), zero<S>(), zero<S>()};
  return aut_matrix<S>(a, b, zero<S>(), zero<S>(), zero<S>(), zero<S>());
}

template <class S>
Matrix<S> shear_f(const S& b4) {
  std::array<S, 7> a{zero<S>(), one<S>(), zero<S>(), zero<S>(), one<S>(), zero<S>(), zero<S>()};
  std::array<S, 7> b{zero<S>(), one<S>(), one<S>(), zero<S>(), b4, zero<S>(), zero<S>()};
  return aut_matrix<S>(a, b, zero<S>(), zero<S>(), zero<S>(), zero<S>());
}

template <class S>
struct ClassifyState {
  KForm<S> cur;
  Matrix<S> N;
  S scale;
  bool swapped = false;

  void apply(const Matrix<S>& t) {
    cur = pullback(t, cur);
    N = N * t;
  }
  void rescale(S s) {  // by value: callers pass references into cur itself
    if (is_zero(s)) fail(Err::Degenerate, "classify: zero pivot while normalising");
    cur = cur * (one<S>() / s);
    scale *= s;
  }
};

// Bring reader(cur) = (kill, keep) to (0, nonzero) by one of the explicit
// moves; readers are evaluated on the current form.
template <class S>
void achieve_zero(ClassifyState<S>& st, bool e_side,
                  const std::function<std::pair<S, S>(const KForm<S>&)>& reader) {
  auto [kill, keep] = reader(st.cur);
  if (is_zero(kill) && !is_zero(keep)) return;
  std::vector<Matrix<S>> cands;
  if (e_side) {
    cands.push_back(swap_e12<S>());
    if (!is_zero(kill) && !is_zero(keep)) {
      cands.push_back(shear_e<S>(keep / kill));
      cands.push_back(shear_e<S>(-keep / kill));
    }
  } else {
    cands.push_back(swap_f12<S>());
    if (!is_zero(kill) && !is_zero(keep)) {
      cands.push_back(shear_f<S>(keep / kill));
      cands.push_back(shear_f<S>(-keep / kill));
    }
  }
  for (const auto& t : cands) {
    KForm<S> probe = pullback(t, st.cur);
    auto [k2, p2] = reader(probe);
    if (is_zero(k2) && !is_zero(p2)) {
      st.apply(t);
      return;
    }
  }
  fail(Err::Degenerate, "classify: normalising move failed");
}

template <class S>
std::array<S, 10> gammas(const KForm<S>& w) {
  auto oc = read_omega(w);
  return {zero<S>(), oc.gamma[1][1], oc.gamma[1][2], oc.gamma[1][3], oc.gamma[2][1],
          oc.gamma[2][2], oc.gamma[2][3], oc.gamma[3][1], oc.gamma[3][2], oc.gamma[3][3]};
}

}  // namespace

template <class S>
LieAlgebraCE<S> algebra_from_d1(std::vector<KForm<S>> d1, std::string name) {
  LieAlgebraCE<S> L;
  L.n = int(d1.size());
  L.d1 = std::move(d1);
  L.name = std::move(name);
  if (!L.d_squared_zero()) fail(Err::NotClosed, "algebra: d^2 != 0 (not a Lie algebra)");
  return L;
}

template <class S>
LieAlgebraCE<S> h3h3() {
  std::vector<KForm<S>> d1(6, KForm<S>(6, 2));
  d1[2].at_mask(0b000011) = one<S>();  // de^3 = e^12
  d1[5].at_mask(0b011000) = one<S>();  // df^3 = f^12
  return algebra_from_d1(std::move(d1), "h3h3");
}

template <class S>
KForm<S> omega_normal_form(int type, const S& beta) {
  const char* lit = nullptr;
  switch (type) {
    case 1: lit = "e1f1+e2f2+e3f3"; break;
    case 2: lit = "e2f2+e13+f13"; break;
    case 3: lit = "e1f3+e2f2+e3f1"; break;
    case 4: lit = "e1f3+e2f2+e3f1+e13"; break;
    case 5: lit = "e1f3+e2f2+e13+f13"; break;
    default: fail(Err::WrongOrbit, "normal form type out of range");
  }
  KForm<Quad> q = parse_form(lit, 6);
  KForm<S> out(6, 2);
  for (size_t i = 0; i < q.c.size(); ++i)
    out.c[i] = scalar_traits<S>::from_int(long(q.c[i].a.get_num().get_si()));
  if (type == 4) out.at_mask(uint16_t((1 << 3) | (1 << 5))) += beta;  // + beta f^13
  return out;
}

template <class S>
TwoFormOrbit<S> classify_two_form(const LieAlgebraCE<S>& L, const KForm<S>& omega) {
  if (L.n != 6) fail(Err::DimensionMismatch, "classify: needs h3+h3");
  KForm<S> w3 = wedge(omega, wedge(omega, omega));
  if (is_zero(top_coeff(w3))) fail(Err::Degenerate, "classify: omega^3 = 0");
  if (!wedge(omega, L.d(omega)).is_zero_form())
    fail(Err::NotCoclosed, "classify: d(omega^2) != 0");

  auto oc0 = read_omega(omega);
  bool k1 = !is_zero(oc0.gamma[3][3]);
  bool k2 = !is_zero(oc0.gamma[1][3]) || !is_zero(oc0.gamma[2][3]);
  bool k3 = !is_zero(oc0.gamma[3][1]) || !is_zero(oc0.gamma[3][2]);
  bool k4 = !is_zero(oc0.alpha[1]) || !is_zero(oc0.alpha[2]) || !is_zero(oc0.beta[1]) ||
            !is_zero(oc0.beta[2]);

  TwoFormOrbit<S> out;
  if (k1)
    out.type = 1;
  else if (!k2 && !k3)
    out.type = 2;
  else if (k2 && k3)
    out.type = k4 ? 4 : 3;
  else {
    out.type = 5;
    out.subcase = k2 ? 2 : 3;
  }

  ClassifyState<S> st{omega, Matrix<S>::identity(6), one<S>()};

  auto g = [&](int i, int j) { return gammas(st.cur)[3 * (i - 1) + j]; };
  auto alpha = [&](int i) { return read_omega(st.cur).alpha[i]; };
  auto beta = [&](int i) { return read_omega(st.cur).beta[i]; };

  switch (out.type) {
    case 1: {
      st.rescale(g(3, 3));
      auto G = gammas(st.cur);
      auto oc = read_omega(st.cur);
      auto gg = [&](int i, int j) { return G[3 * (i - 1) + j]; };
      std::array<S, 7> a{zero<S>(), one<S>(),        zero<S>(), zero<S>(),
                         one<S>(),  -gg(1, 3), -gg(2, 3)};
      std::array<S, 7> b{
          zero<S>(),
          gg(2, 2) - gg(2, 3) * gg(3, 2) - oc.alpha[1] * oc.beta[1],
          -gg(1, 2) - oc.beta[1] * oc.alpha[2] + gg(3, 2) * gg(1, 3),
          -gg(2, 1) + gg(3, 1) * gg(2, 3) - oc.beta[2] * oc.alpha[1],
          gg(1, 1) - oc.alpha[2] * oc.beta[2] - gg(1, 3) * gg(3, 1),
          -gg(3, 1) * gg(2, 2) + gg(3, 1) * oc.alpha[1] * oc.beta[1] + gg(3, 2) * gg(2, 1) +
              gg(3, 2) * oc.beta[2] * oc.alpha[1],
          gg(3, 1) * gg(1, 2) + gg(3, 1) * oc.beta[1] * oc.alpha[2] - gg(3, 2) * gg(1, 1) +
              gg(3, 2) * oc.alpha[2] * oc.beta[2]};
      S c1 = oc.beta[2] * gg(2, 2) - oc.beta[2] * gg(2, 3) * gg(3, 2) + oc.beta[1] * gg(2, 1) -
             oc.beta[1] * gg(3, 1) * gg(2, 3);
      S c2 = -oc.beta[2] * gg(1, 2) + oc.beta[2] * gg(3, 2) * gg(1, 3) - oc.beta[1] * gg(1, 1) +
             oc.beta[1] * gg(1, 3) * gg(3, 1);
      st.apply(aut_matrix<S>(a, b, c1, c2, -oc.alpha[2], oc.alpha[1]));
      st.rescale(g(1, 1));
      break;
    }
    case 2: {
      achieve_zero<S>(st, true, [](const KForm<S>& w) {
        auto oc = read_omega(w);
        return std::pair<S, S>(oc.alpha[1], oc.alpha[2]);
      });
      achieve_zero<S>(st, false, [](const KForm<S>& w) {
        auto oc = read_omega(w);
        return std::pair<S, S>(oc.beta[1], oc.beta[2]);
      });
      st.rescale(g(2, 2));
      S a2 = alpha(2), a3 = alpha(3), b2 = beta(2), b3 = beta(3);
      std::array<S, 7> a{zero<S>(), one<S>(), zero<S>(), zero<S>(), -b2, zero<S>(), -a3 * b2 / a2};
      std::array<S, 7> b{zero<S>(), one<S>(), zero<S>(), zero<S>(), -a2, zero<S>(), -a2 * b3 / b2};
      st.apply(aut_matrix<S>(a, b, g(1, 1) / a2, -g(1, 2), zero<S>(), g(2, 1)));
      st.rescale(st.cur.at_mask(uint16_t((1 << 1) | (1 << 4))));  // lands on a multiple
      break;
    }
    case 3:
    case 4: {
      achieve_zero<S>(st, true, [](const KForm<S>& w) {
        auto oc = read_omega(w);
        return std::pair<S, S>(oc.gamma[2][3], oc.gamma[1][3]);
      });
      achieve_zero<S>(st, false, [](const KForm<S>& w) {
        auto oc = read_omega(w);
        return std::pair<S, S>(oc.gamma[3][2], oc.gamma[3][1]);
      });
      st.rescale(g(2, 2));
      {
        S g13 = g(1, 3), g31 = g(3, 1), g12 = g(1, 2), g21 = g(2, 1), g11 = g(1, 1);
        S a2v = alpha(2), a3v = alpha(3), b2v = beta(2), b3v = beta(3);
        std::array<S, 7> a{zero<S>(), one<S>(), zero<S>(), (a2v * b3v - g31 * g12) / g31,
                           g13,       zero<S>(), zero<S>()};
        std::array<S, 7> b{zero<S>(),
                           one<S>(),
                           zero<S>(),
                           (b2v * a3v - g13 * g21) / g13,
                           g31,
                           (g12 * g13 * g21 * g31 - g11 * g13 * g31 - a2v * a3v * b2v * b3v) /
                               (g13 * g13 * g31),
                           zero<S>()};
        st.apply(aut_matrix<S>(a, b, zero<S>(), b3v, zero<S>(), -a3v));
      }
      // expected pattern: s(e1f3 + e2f2 + e3f1) + alpha2~ e31 + beta2~ f31
      {
        S s = st.cur.at_mask(uint16_t((1 << 1) | (1 << 4)));
        if (is_zero(s)) fail(Err::Degenerate, "classify: unexpected pattern (type 3/4)");
        st.rescale(s);
      }
      if (out.type == 3) break;
      if (is_zero(alpha(2))) {
        st.apply(swap_summands<S>());
        out.summand_swap = true;
        S s = st.cur.at_mask(uint16_t((1 << 1) | (1 << 4)));
        st.rescale(s);
      }
      {
        // a4 = b1 = b4 = -alpha2 (not -1/alpha2): lands on omega4 with
        // beta = alpha2 * beta2 for every alpha2 != 0, verified by pullback.
        S a2v = alpha(2);
        if (is_zero(a2v)) fail(Err::Degenerate, "classify: type 4 without kappa4 e-part");
        std::array<S, 7> a{zero<S>(), one<S>(), zero<S>(), zero<S>(), -a2v, zero<S>(), zero<S>()};
        std::array<S, 7> b{zero<S>(), -a2v, zero<S>(), zero<S>(), -a2v, zero<S>(), zero<S>()};
        st.apply(aut_matrix<S>(a, b, zero<S>(), zero<S>(), zero<S>(), zero<S>()));
      }
      {
        S s = st.cur.at_mask(uint16_t((1 << 1) | (1 << 4)));
        if (is_zero(s)) fail(Err::Degenerate, "classify: type 4 pattern lost");
        st.rescale(s);
        out.beta = st.cur.at_mask(uint16_t((1 << 3) | (1 << 5)));  // f^13 coefficient
      }
      break;
    }
    case 5: {
      if (out.subcase == 3) {
        st.apply(swap_summands<S>());
        out.summand_swap = true;
      }
      achieve_zero<S>(st, true, [](const KForm<S>& w) {
        auto oc = read_omega(w);
        return std::pair<S, S>(oc.gamma[2][3], oc.gamma[1][3]);
      });
      achieve_zero<S>(st, false, [](const KForm<S>& w) {
        auto oc = read_omega(w);
        return std::pair<S, S>(oc.beta[1], oc.beta[2]);
      });
      st.rescale(g(2, 2));
      {
        S g13 = g(1, 3), g12 = g(1, 2), g21 = g(2, 1), g11 = g(1, 1);
        S a2v = alpha(2), a3v = alpha(3), b2v = beta(2), b3v = beta(3);
        std::array<S, 7> a{zero<S>(),
                           one<S>(),
                           zero<S>(),
                           zero<S>(),
                           -g13 * g13 / b2v,
                           zero<S>(),
                           g13 * g13 * (g13 * g21 - a3v * b2v) / (a2v * b2v * b2v)};
        std::array<S, 7> b{zero<S>(), -g13 / b2v, zero<S>(), zero<S>(),
                           -a2v,      zero<S>(),  -b3v * a2v / b2v};
        st.apply(aut_matrix<S>(a, b, zero<S>(), -(g12 * b2v + g13 * b3v) / b2v, -g11 / b2v,
                               g13 * g13 * g21 / (b2v * b2v)));
      }
      {
        S s = st.cur.at_mask(uint16_t((1 << 1) | (1 << 4)));
        if (is_zero(s)) fail(Err::Degenerate, "classify: unexpected pattern (type 5)");
        st.rescale(s);
      }
      break;
    }
  }

  KForm<S> target = omega_normal_form<S>(out.type, out.beta);
  if (!(st.cur == target)) fail(Err::Degenerate, "classify: pullback verification failed");
  if (!(pullback(st.N, omega) == target * st.scale))
    fail(Err::Degenerate, "classify: normalizer verification failed");
  if (!is_ce_automorphism(L, st.N))
    fail(Err::Degenerate, "classify: normalizer is not an automorphism");
  out.normalizer = st.N;
  out.scale = st.scale;
  return out;
}

template <class S>
std::vector<KForm<S>> rho1_generators() {
  const char* lits[9] = {"e123",          "f123",          "e1f23",
                         "e2f13",         "e23f1",         "e13f2",
                         "e2f23-e1f13",   "e12f3-e3f12",   "e23f2-e13f1"};
  std::vector<KForm<S>> out;
  for (const char* lit : lits) {
    KForm<Quad> q = parse_form(lit, 6);
    KForm<S> f(6, 3);
    for (size_t i = 0; i < q.c.size(); ++i)
      f.c[i] = scalar_traits<S>::from_int(long(q.c[i].a.get_num().get_si()));
    out.push_back(std::move(f));
  }
  return out;
}

template <class S>
KForm<S> rho1_family(const std::array<S, 9>& a) {
  auto gens = rho1_generators<S>();
  KForm<S> r(6, 3);
  for (int i = 0; i < 9; ++i) {
    for (size_t j = 0; j < r.c.size(); ++j) r.c[j] += a[i] * gens[i].c[j];
  }
  return r;
}

template <class S>
HalfFlatFamily<S> halfflat_family(const LieAlgebraCE<S>& L, int orbit_type, const S& beta4) {
  HalfFlatFamily<S> fam;
  fam.omega = omega_normal_form<S>(orbit_type, beta4);
  // rows: d rho = 0 (Lambda^4) and omega ^ rho = 0 (Lambda^5)
  Matrix<S> d3 = L.d_matrix(3);
  const auto& m3 = basis_masks(6, 3);
  Matrix<S> sys(d3.rows() + 6, int(m3.size()));
  for (int i = 0; i < d3.rows(); ++i)
    for (int j = 0; j < d3.cols(); ++j) sys(i, j) = d3(i, j);
  for (size_t j = 0; j < m3.size(); ++j) {
    KForm<S> w = wedge(fam.omega, basis_form<S>(6, m3[j]));
    for (int i = 0; i < 6; ++i) sys(d3.rows() + i, int(j)) = w.c[i];
  }
  auto null_basis = nullspace(sys);
  for (auto& v : null_basis) {
    KForm<S> f(6, 3);
    f.c = v;
    fam.basis.push_back(std::move(f));
  }
  if (orbit_type == 1) {
    // must coincide with the printed nine-generator family
    auto printed = rho1_generators<S>();
    Matrix<S> both(int(fam.basis.size() + printed.size()), int(m3.size()));
    for (size_t i = 0; i < fam.basis.size(); ++i)
      for (size_t j = 0; j < m3.size(); ++j) both(int(i), int(j)) = fam.basis[i].c[j];
    for (size_t i = 0; i < printed.size(); ++i)
      for (size_t j = 0; j < m3.size(); ++j)
        both(int(fam.basis.size() + i), int(j)) = printed[i].c[j];
    if (fam.basis.size() != 9 || rank_of(both) != 9)
      fail(Err::Degenerate, "halfflat_family: printed family mismatch");
    fam.basis = printed;
  }
  return fam;
}

std::vector<std::string> trick17_algebras() {
  return {"0,0,0,0,e12,e34", "0,0,0,0,e13+e42,e14+e23", "0,0,0,0,e12,e14+e23",
          "0,0,0,0,0,e12+e34"};
}

namespace {
template <class S>
S from_quad(const Quad& q);
template <>
Rational from_quad<Rational>(const Quad& q) {
  if (q.b != 0) throw std::invalid_argument("irrational coefficient where a rational is required");
  return q.a;
}
template <>
Quad from_quad<Quad>(const Quad& q) {
  return q;
}
template <>
double from_quad<double>(const Quad& q) {
  return to_double(q);
}
}  // namespace

template <class S>
LieAlgebraCE<S> algebra_from_string(const std::string& salamon, std::string name) {
  std::vector<std::string> entries;
  std::stringstream ss(salamon);
  std::string tok;
  while (std::getline(ss, tok, ',')) entries.push_back(tok);
  int n = int(entries.size());
  if (n < 3 || n > 8) fail(Err::DimensionMismatch, "algebra string: dimension out of range");
  std::vector<KForm<S>> d1;
  for (auto& e : entries) {
    std::string trimmed;
    for (char c : e)
      if (!std::isspace(unsigned(c))) trimmed += c;
    if (trimmed == "0") {
      d1.emplace_back(n, 2);
      continue;
    }
    KForm<Quad> q = parse_form(trimmed, n);
    if (q.k != 2) fail(Err::DimensionMismatch, "algebra string: entries must be two-forms");
    KForm<S> f(n, 2);
    for (size_t i = 0; i < q.c.size(); ++i) f.c[i] = from_quad<S>(q.c[i]);
    d1.push_back(std::move(f));
  }
  return algebra_from_d1<S>(std::move(d1), name.empty() ? salamon : std::move(name));
}

template <class S>
LieAlgebraCE<S> algebra_named(const std::string& name) {
  if (name == "h3h3") return h3h3<S>();
  return algebra_from_string<S>(name);
}

template LieAlgebraCE<Rational> algebra_from_string<Rational>(const std::string&, std::string);
template LieAlgebraCE<Quad> algebra_from_string<Quad>(const std::string&, std::string);
template LieAlgebraCE<double> algebra_from_string<double>(const std::string&, std::string);
template LieAlgebraCE<Rational> algebra_named<Rational>(const std::string&);
template LieAlgebraCE<Quad> algebra_named<Quad>(const std::string&);
template LieAlgebraCE<double> algebra_named<double>(const std::string&);

template LieAlgebraCE<Rational> h3h3<Rational>();
template LieAlgebraCE<Quad> h3h3<Quad>();
template LieAlgebraCE<double> h3h3<double>();
template LieAlgebraCE<Rational> algebra_from_d1<Rational>(std::vector<KForm<Rational>>, std::string);
template LieAlgebraCE<Quad> algebra_from_d1<Quad>(std::vector<KForm<Quad>>, std::string);
template LieAlgebraCE<double> algebra_from_d1<double>(std::vector<KForm<double>>, std::string);
template KForm<Rational> omega_normal_form<Rational>(int, const Rational&);
template KForm<Quad> omega_normal_form<Quad>(int, const Quad&);
template TwoFormOrbit<Rational> classify_two_form<Rational>(const LieAlgebraCE<Rational>&,
                                                            const KForm<Rational>&);
template TwoFormOrbit<Quad> classify_two_form<Quad>(const LieAlgebraCE<Quad>&, const KForm<Quad>&);
template std::vector<KForm<Rational>> rho1_generators<Rational>();
template std::vector<KForm<Quad>> rho1_generators<Quad>();
template std::vector<KForm<double>> rho1_generators<double>();
template KForm<Rational> rho1_family<Rational>(const std::array<Rational, 9>&);
template KForm<Quad> rho1_family<Quad>(const std::array<Quad, 9>&);
template KForm<double> rho1_family<double>(const std::array<double, 9>&);
template HalfFlatFamily<Rational> halfflat_family<Rational>(const LieAlgebraCE<Rational>&, int,
                                                            const Rational&);
template HalfFlatFamily<Quad> halfflat_family<Quad>(const LieAlgebraCE<Quad>&, int, const Quad&);

}  // namespace hlab
