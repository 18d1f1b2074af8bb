#include "skein/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

LaurentPoly2::LaurentPoly2(long constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

LaurentPoly2 LaurentPoly2::monomial(int v_exp, int z_exp, Coeff coeff) {
  LaurentPoly2 p;
  if (coeff != 0) p.terms_[{v_exp, z_exp}] = std::move(coeff);
  return p;
}

LaurentPoly2 LaurentPoly2::delta_power(int k) {
  if (k < 0) throw IndexOutOfRange("delta_power: negative exponent");
  // ((v^-1 - v)/z)^k expanded via binomials:
  //   sum_j C(k,j) (-1)^j v^(2j-k) z^-k
  LaurentPoly2 p;
  Coeff binom = 1;
  for (int j = 0; j <= k; ++j) {
    p.terms_[{2 * j - k, -k}] = (j % 2 == 0) ? binom : -binom;
    binom = binom * (k - j) / (j + 1);
  }
  return p;
}

void LaurentPoly2::add_term(int v_exp, int z_exp, const Coeff& coeff) {
  if (coeff == 0) return;
  Exponents key{v_exp, z_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.v, e.z, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.v, e.z, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
  LaurentPoly2 out;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_)
      out.add_term(ea.v + eb.v, ea.z + eb.z, ca * cb);
  return out;
}

LaurentPoly2 LaurentPoly2::mono_mul(int v_exp, int z_exp, const Coeff& coeff) const {
  LaurentPoly2 out;
  if (coeff == 0) return out;
  for (const auto& [e, c] : terms_)
    out.terms_[{e.v + v_exp, e.z + z_exp}] = c * coeff;
  return out;
}

LaurentPoly2 LaurentPoly2::v_inverted() const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_[{-e.v, e.z}] = c;
  return out;
}

LaurentPoly2 LaurentPoly2::mirror_image() const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) {
    bool odd = ((e.z % 2) + 2) % 2 == 1;
    out.terms_[{-e.v, e.z}] = odd ? -c : c;
  }
  return out;
}

int LaurentPoly2::min_deg_v() const {
  if (is_zero()) throw ZeroPolynomial("min_deg_v of zero polynomial");
  int best = terms_.begin()->first.v;
  for (const auto& [e, c] : terms_) best = std::min(best, e.v);
  return best;
}

int LaurentPoly2::max_deg_v() const {
  if (is_zero()) throw ZeroPolynomial("max_deg_v of zero polynomial");
  int best = terms_.begin()->first.v;
  for (const auto& [e, c] : terms_) best = std::max(best, e.v);
  return best;
}

int LaurentPoly2::min_deg_z() const {
  if (is_zero()) throw ZeroPolynomial("min_deg_z of zero polynomial");
  return terms_.begin()->first.z;  // term order is z-ascending
}

int LaurentPoly2::max_deg_z() const {
  if (is_zero()) throw ZeroPolynomial("max_deg_z of zero polynomial");
  return terms_.rbegin()->first.z;
}

LaurentPoly1 LaurentPoly2::highest_z_term() const {
  int zmax = max_deg_z();
  LaurentPoly1 h;
  for (const auto& [e, c] : terms_)
    if (e.z == zmax) h.add_term(e.v, c);
  return h;
}

Coeff LaurentPoly2::coefficient(int v_exp, int z_exp) const {
  auto it = terms_.find({v_exp, z_exp});
  return it == terms_.end() ? Coeff(0) : it->second;
}

namespace {

void append_factor(std::ostringstream& os, bool& need_star, char var, int exp) {
  if (exp == 0) return;
  if (need_star) os << '*';
  os << var;
  if (exp != 1) os << '^' << exp;
  need_star = true;
}

void append_term(std::ostringstream& os, bool first, const Exponents& e, const Coeff& c) {
  Coeff mag = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool need_star = false;
  if (mag != 1 || (e.v == 0 && e.z == 0)) {
    os << mag.get_str();
    need_star = true;
  }
  append_factor(os, need_star, 'v', e.v);
  append_factor(os, need_star, 'z', e.z);
}

}  // namespace

std::string LaurentPoly2::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, e, c);
    first = false;
  }
  return os.str();
}

namespace {

// Scanner for the canonical text form (accepts arbitrary spacing and
// term order, '*' optional between coefficient and variables).
struct PolyScanner {
  const std::string& s;
  size_t i = 0;

  explicit PolyScanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }

  long read_int() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw MalformedSyntax("polynomial: expected integer at offset " + std::to_string(start));
    return std::strtol(s.substr(start, i - start).c_str(), nullptr, 10);
  }

  // coefficient [*] [v[^e]] [*] [z[^e]]
  void read_term(LaurentPoly2& out, int sign) {
    skip_ws();
    Coeff coeff = sign;
    bool saw_anything = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      coeff *= Coeff(s.substr(start, i - start));
      saw_anything = true;
    }
    int ve = 0, ze = 0;
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i < s.size() && (s[i] == 'v' || s[i] == 'z')) {
        char var = s[i++];
        int exp = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
          ++i;
          exp = static_cast<int>(read_int());
        }
        (var == 'v' ? ve : ze) += exp;
        saw_anything = true;
        continue;
      }
      break;
    }
    if (!saw_anything)
      throw MalformedSyntax("polynomial: empty term at offset " + std::to_string(i));
    out.add_term(ve, ze, coeff);
  }
};

}  // namespace

LaurentPoly2 LaurentPoly2::parse(const std::string& text) {
  LaurentPoly2 out;
  PolyScanner sc(text);
  if (sc.done()) throw MalformedSyntax("polynomial: empty input");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
      sign = (sc.peek() == '-') ? -1 : 1;
      ++sc.i;
    } else if (!first) {
      throw MalformedSyntax("polynomial: expected '+' or '-' at offset " + std::to_string(sc.i));
    }
    sc.read_term(out, sign);
    first = false;
  }
  return out;
}

void LaurentPoly1::add_term(int v_exp, const Coeff& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(v_exp);
  if (it == terms_.end()) {
    terms_.emplace(v_exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff LaurentPoly1::coefficient(int v_exp) const {
  auto it = terms_.find(v_exp);
  return it == terms_.end() ? Coeff(0) : it->second;
}

int LaurentPoly1::min_deg() const {
  if (is_zero()) throw ZeroPolynomial("min_deg of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly1::max_deg() const {
  if (is_zero()) throw ZeroPolynomial("max_deg of zero polynomial");
  return terms_.rbegin()->first;
}

std::string LaurentPoly1::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(os, first, Exponents{it->first, 0}, it->second);
    first = false;
  }
  return os.str();
}

}  // namespace skein
