#pragma once

#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "alexobs/rational.hpp"

namespace alexobs {

// An element of Gamma = Q[t,t^-1], stored as exponent -> nonzero coefficient.
// The units of Gamma are exactly c*t^k (c != 0), so equality of orders of
// torsion modules is unit_equivalence, and normalize() picks the canonical
// representative: minimum exponent 0, top coefficient 1.
class LaurentPoly {
 public:
  using TermMap = std::map<long long, Rational>;

  LaurentPoly() = default;  // the zero polynomial
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly one();
  static LaurentPoly t();
  static LaurentPoly monomial(const Rational& c, long long exponent);
  // t^m - 1 for m >= 1.
  static LaurentPoly t_power_minus_one(long long m);
  // Convenience for tests and literals: {exponent, integer coefficient} pairs.
  static LaurentPoly from_terms(
      std::initializer_list<std::pair<long long, long long>> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const { return terms_.size() == 1; }
  bool is_one() const;

  const TermMap& terms() const { return terms_; }
  Rational coeff(long long exponent) const;
  // Lowest/highest exponent with nonzero coefficient. Undefined on zero.
  long long min_exp() const;
  long long max_exp() const;
  // max_exp - min_exp; the degree of the polynomial part.
  long long degree_span() const;
  Rational leading_coeff() const;

  // Sum of coefficients, i.e. the value at t = 1.
  Rational eval_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& c);

  bool operator==(const LaurentPoly& rhs) const = default;

  std::string str() const;

  void set_coeff(long long exponent, const Rational& c);

 private:
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator*(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator*(LaurentPoly lhs, const Rational& c);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly pow(const LaurentPoly& base, unsigned long long exponent);

// Canonical representative of the unit-equivalence class: min exponent 0,
// leading (highest-degree) coefficient 1. Throws std::domain_error on zero.
LaurentPoly normalize(const LaurentPoly& p);

// p == c * t^k * q for some c != 0, k.
bool unit_equivalent(const LaurentPoly& p, const LaurentPoly& q);

// Does a divide b in Gamma? a == 0 is a domain error; a | 0 holds.
bool divides(const LaurentPoly& a, const LaurentPoly& b);

// a / b for exact divisions only; throws std::domain_error on a remainder.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Normalized gcd in the PID Gamma. gcd(p, 0) = normalize(p); gcd(0, 0) throws.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace alexobs
