#include "hitchinlab/io.hpp"

#include <cctype>

namespace hlab {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(unsigned(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

// number := digits [ '/' digits | '.' digits ]
Rational parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(unsigned(c.s[c.i]))) ++c.i;
  if (c.i == start) throw std::invalid_argument("expected number in: " + c.s);
  if (c.i < c.s.size() && c.s[c.i] == '.') {
    ++c.i;
    while (c.i < c.s.size() && std::isdigit(unsigned(c.s[c.i]))) ++c.i;
    return rat_from_string(c.s.substr(start, c.i - start));
  }
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    size_t dstart = c.i;
    while (c.i < c.s.size() && std::isdigit(unsigned(c.s[c.i]))) ++c.i;
    if (c.i == dstart) throw std::invalid_argument("expected denominator in: " + c.s);
    return rat_from_string(c.s.substr(start, c.i - start));
  }
  return rat_from_string(c.s.substr(start, c.i - start));
}

bool eat_sqrt(Cursor& c, long& d_out) {
  c.skip_ws();
  if (c.s.compare(c.i, 4, "sqrt") != 0) return false;
  c.i += 4;
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(unsigned(c.s[c.i]))) ++c.i;
  if (c.i == start) throw std::invalid_argument("sqrt needs an integer radicand");
  d_out = std::stol(c.s.substr(start, c.i - start));
  return true;
}

// one signed product: [-|+] [number] ['*'] [sqrtD]
Quad parse_signed_product(Cursor& c, long default_d, bool sign_consumed, int sign) {
  if (!sign_consumed) {
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      c.take();
      sign = ch == '-' ? -1 : 1;
    }
  }
  Rational num(1);
  bool have_num = false;
  if (std::isdigit(unsigned(c.peek()))) {
    num = parse_number(c);
    have_num = true;
  }
  if (c.peek() == '*') c.take();
  long d = default_d;
  if (eat_sqrt(c, d)) {
    Rational b = num;
    if (sign < 0) b = -b;
    return Quad(Rational(0), b, d);
  }
  if (!have_num) throw std::invalid_argument("expected a number in: " + c.s);
  if (sign < 0) num = -num;
  return Quad(num, Rational(0), default_d);
}

// scalar := product (('+'|'-') product)*
Quad parse_scalar_expr(Cursor& c, long default_d) {
  Quad acc = parse_signed_product(c, default_d, false, 1);
  while (true) {
    char ch = c.peek();
    if (ch != '+' && ch != '-') break;
    acc += parse_signed_product(c, default_d, false, 1);
  }
  return acc;
}

// basis token: ('e'|'f') digit+ repeated, e.g. "e12", "e1f23", "f123"
bool peek_basis(Cursor& c) {
  char ch = c.peek();
  return ch == 'e' || ch == 'f';
}

// Parses a product of wedge letters; `parity` reports whether sorting the
// written index sequence needs an odd permutation (e.g. "e31" = -e^{13}).
uint16_t parse_basis(Cursor& c, bool& used_f, int& max_index, int& parity) {
  uint16_t mask = 0;
  std::vector<int> written;
  while (true) {
    char ch = c.peek();
    if (ch != 'e' && ch != 'f') break;
    // "sqrt" never starts a basis token here, terms are split beforehand
    c.take();
    int offset = ch == 'f' ? 3 : 0;
    if (ch == 'f') used_f = true;
    bool any = false;
    while (c.i < c.s.size() && std::isdigit(unsigned(c.s[c.i]))) {
      int idx = c.s[c.i] - '0';
      ++c.i;
      if (idx < 1 || idx > 9) throw std::invalid_argument("basis index out of range");
      int pos = idx - 1 + offset;
      uint16_t bit = uint16_t(1) << pos;
      if (mask & bit) throw std::invalid_argument("repeated index in basis token");
      mask |= bit;
      written.push_back(pos);
      max_index = std::max(max_index, pos + 1);
      any = true;
    }
    if (!any) throw std::invalid_argument("letter without index in form literal");
  }
  int inv = 0;
  for (size_t i = 0; i < written.size(); ++i)
    for (size_t j = i + 1; j < written.size(); ++j)
      if (written[i] > written[j]) ++inv;
  parity = inv & 1;
  return mask;
}

}  // namespace

Quad parse_scalar(const std::string& text, long default_d) {
  Cursor c{text};
  Quad q = parse_scalar_expr(c, default_d);
  if (!c.done()) throw std::invalid_argument("trailing input in scalar: " + text);
  return q;
}

KForm<Quad> parse_form(const std::string& text, int n, long default_d) {
  Cursor c{text};
  std::vector<std::pair<Quad, uint16_t>> terms;
  bool used_f = false;
  int max_index = 0;
  int k = -1;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      c.take();
      sign = ch == '-' ? -1 : 1;
    } else if (!terms.empty()) {
      throw std::invalid_argument("expected + or - between terms: " + text);
    }
    Quad coeff(Rational(1));
    if (c.peek() == '(') {
      c.take();
      coeff = parse_scalar_expr(c, default_d);
      if (c.take() != ')') throw std::invalid_argument("unbalanced parentheses: " + text);
      if (c.peek() == '*') c.take();
    } else if (std::isdigit(unsigned(c.peek())) || c.s.compare(c.i, 4, "sqrt") == 0) {
      coeff = parse_signed_product(c, default_d, true, 1);
      if (c.peek() == '*') c.take();
    }
    if (sign < 0) coeff = -coeff;
    uint16_t mask = 0;
    if (peek_basis(c)) {
      int parity = 0;
      mask = parse_basis(c, used_f, max_index, parity);
      if (parity) coeff = -coeff;
    }
    int deg = popcount16(mask);
    if (k < 0)
      k = deg;
    else if (k != deg)
      throw std::invalid_argument("mixed degrees in form literal: " + text);
    terms.emplace_back(coeff, mask);
  }
  if (terms.empty()) throw std::invalid_argument("empty form literal");
  if (n == 0) n = std::max(max_index, used_f ? 6 : 0);
  if (max_index > n) throw std::invalid_argument("basis index exceeds the ambient dimension");
  if (n < 2 || n > 8) throw std::invalid_argument("ambient dimension out of range 2..8");
  KForm<Quad> f(n, std::max(k, 0));
  for (auto& [coeff, mask] : terms) {
    if (popcount16(mask) != f.k) continue;
    f.at_mask(mask) += coeff;
  }
  return f;
}

KForm<Rational> form_to_rational(const KForm<Quad>& f) {
  KForm<Rational> r(f.n, f.k, f.multivector);
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i].b != 0) throw std::invalid_argument("form has irrational coefficients");
    r.c[i] = f.c[i].a;
  }
  return r;
}

namespace {
std::string mask_to_token(int n, uint16_t mask, bool ef_letters) {
  std::string out;
  bool use_ef = ef_letters && n == 6;
  if (use_ef) {
    std::string e, f;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) {
        if (i < 3)
          e += char('1' + i);
        else
          f += char('1' + i - 3);
      }
    if (!e.empty()) out += "e" + e;
    if (!f.empty()) out += "f" + f;
  } else {
    out = "e";
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) out += char('1' + i);
  }
  return out;
}

template <class S>
std::string form_to_string_impl(const KForm<S>& f, bool ef_letters) {
  const auto& masks = basis_masks(f.n, f.k);
  std::string out;
  for (size_t t = 0; t < masks.size(); ++t) {
    if (is_zero(f.c[t])) continue;
    std::string coeff = scalar_to_string(f.c[t]);
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (neg) coeff = coeff.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (coeff != "1" || f.k == 0) {
      out += coeff;
      if (coeff.find_first_of("+-") != std::string::npos && f.k > 0)
        out = out.substr(0, out.size() - coeff.size()) + "(" + coeff + ")";
      if (f.k > 0) out += "*";
    }
    if (f.k > 0) out += mask_to_token(f.n, masks[t], ef_letters);
  }
  return out.empty() ? "0" : out;
}

template <class S>
nlohmann::json form_to_json_impl(const KForm<S>& f) {
  nlohmann::json arr = nlohmann::json::array();
  const auto& masks = basis_masks(f.n, f.k);
  for (size_t t = 0; t < masks.size(); ++t) {
    if (is_zero(f.c[t])) continue;
    nlohmann::json idx = nlohmann::json::array();
    for (int i = 0; i < f.n; ++i)
      if (masks[t] >> i & 1) idx.push_back(i + 1);
    arr.push_back({{"idx", idx}, {"c", scalar_to_string(f.c[t])}});
  }
  return {{"n", f.n}, {"k", f.k}, {"terms", arr}};
}
}  // namespace

std::string form_to_string(const KForm<Quad>& f, bool ef) { return form_to_string_impl(f, ef); }
std::string form_to_string(const KForm<Rational>& f, bool ef) { return form_to_string_impl(f, ef); }
std::string form_to_string(const KForm<double>& f, bool ef) { return form_to_string_impl(f, ef); }

nlohmann::json form_to_json(const KForm<Quad>& f) { return form_to_json_impl(f); }
nlohmann::json form_to_json(const KForm<Rational>& f) { return form_to_json_impl(f); }
nlohmann::json form_to_json(const KForm<double>& f) { return form_to_json_impl(f); }

KForm<Quad> form_from_json(const nlohmann::json& j, int n, long default_d) {
  const nlohmann::json* terms = &j;
  if (j.is_object()) {
    if (j.contains("n")) n = j["n"].get<int>();
    terms = &j.at("terms");
  }
  int k = -1, max_index = 0;
  std::vector<std::pair<Quad, uint16_t>> parsed;
  for (const auto& t : *terms) {
    uint16_t mask = 0;
    for (int idx : t.at("idx")) {
      mask |= uint16_t(1) << (idx - 1);
      max_index = std::max(max_index, idx);
    }
    int deg = popcount16(mask);
    if (k < 0)
      k = deg;
    else if (k != deg)
      throw std::invalid_argument("mixed degrees in JSON form");
    Quad coeff = t.at("c").is_string() ? parse_scalar(t.at("c").get<std::string>(), default_d)
                                       : Quad(rat_from_string(t.at("c").dump()));
    parsed.emplace_back(coeff, mask);
  }
  if (n == 0) n = max_index;
  KForm<Quad> f(n, std::max(k, 0));
  for (auto& [coeff, mask] : parsed) f.at_mask(mask) += coeff;
  return f;
}

}  // namespace hlab
