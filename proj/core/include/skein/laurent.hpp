#ifndef SKEIN_LAURENT_HPP
#define SKEIN_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace skein {

using Coeff = mpz_class;

// Exponent pair of a monomial v^a z^b; both may be negative.
struct Exponents {
  int v = 0;
  int z = 0;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Orders terms by ascending z-degree, then descending v-degree.
// This is also the order used by the textual form.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    if (a.z != b.z) return a.z < b.z;
    return a.v > b.v;
  }
};

class LaurentPoly1;

// Two-variable Laurent polynomial with exact integer coefficients,
// kept in canonical sparse form (no zero coefficients stored).
class LaurentPoly2 {
public:
  using TermMap = std::map<Exponents, Coeff, TermOrder>;

  LaurentPoly2() = default;
  explicit LaurentPoly2(long constant);

  static LaurentPoly2 monomial(int v_exp, int z_exp, Coeff coeff = 1);
  // (v^-1 - v)^k / z^k, the k-component unlink factor; k >= 0.
  static LaurentPoly2 delta_power(int k);
  static LaurentPoly2 parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(int v_exp, int z_exp, const Coeff& coeff);

  LaurentPoly2& operator+=(const LaurentPoly2& rhs);
  LaurentPoly2& operator-=(const LaurentPoly2& rhs);
  friend LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs);

  // p * coeff * v^a z^b
  LaurentPoly2 mono_mul(int v_exp, int z_exp, const Coeff& coeff = 1) const;

  // Image under v -> v^-1 (every v-exponent negated).
  LaurentPoly2 v_inverted() const;

  // Image under (v,z) -> (v^-1, -z): the polynomial of the mirror
  // diagram. Since z-parity is fixed by the component count, this is the
  // v-exponent negation up to one global sign.
  LaurentPoly2 mirror_image() const;

  // Degree queries; all throw ZeroPolynomial on the zero polynomial.
  int min_deg_v() const;
  int max_deg_v() const;
  int min_deg_z() const;
  int max_deg_z() const;
  // Coefficient of z^max_deg_z as a polynomial in v.
  LaurentPoly1 highest_z_term() const;

  // Exact lookup; 0 if the monomial is absent.
  Coeff coefficient(int v_exp, int z_exp) const;

  // Canonical text form, e.g. "-v^4 + 2*v^2 + v^2*z^2"; "0" for zero.
  std::string str() const;

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

private:
  TermMap terms_;
};

// One-variable Laurent polynomial in v (houses highest-z coefficients).
class LaurentPoly1 {
public:
  using TermMap = std::map<int, Coeff>;

  LaurentPoly1() = default;

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(int v_exp, const Coeff& coeff);
  Coeff coefficient(int v_exp) const;
  int min_deg() const;
  int max_deg() const;
  std::string str() const;

  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

private:
  TermMap terms_;
};

}  // namespace skein

#endif  // SKEIN_LAURENT_HPP
