#include "alexobs/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace alexobs {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

Rational make_rational(long long num, long long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  set_coeff(0, constant);
}

LaurentPoly LaurentPoly::one() { return LaurentPoly(Rational(1)); }

LaurentPoly LaurentPoly::t() { return monomial(Rational(1), 1); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long long exponent) {
  LaurentPoly p;
  p.set_coeff(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::t_power_minus_one(long long m) {
  if (m < 1) throw std::domain_error("t^m - 1 requires m >= 1");
  LaurentPoly p;
  p.set_coeff(m, Rational(1));
  p.set_coeff(0, Rational(-1));
  return p;
}

LaurentPoly LaurentPoly::from_terms(
    std::initializer_list<std::pair<long long, long long>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.set_coeff(e, p.coeff(e) + Rational(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(long long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

long long LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

long long LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

long long LaurentPoly::degree_span() const { return max_exp() - min_exp(); }

Rational LaurentPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

Rational LaurentPoly::eval_one() const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void LaurentPoly::set_coeff(long long exponent, const Rational& c) {
  if (c == 0) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = c;
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set_coeff(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set_coeff(e, coeff(e) - c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.set_coeff(ea + eb, out.coeff(ea + eb) + ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
LaurentPoly operator*(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs *= rhs; }
LaurentPoly operator*(LaurentPoly lhs, const Rational& c) { return lhs *= c; }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.str();
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit_coeff = (a == 1) && e != 0;
    if (!unit_coeff) os << rational_str(a);
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& base, unsigned long long exponent) {
  LaurentPoly out = LaurentPoly::one();
  LaurentPoly sq = base;
  unsigned long long e = exponent;
  while (e > 0) {
    if (e & 1) out *= sq;
    e >>= 1;
    if (e > 0) sq *= sq;
  }
  return out;
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no normal form");
  const long long shift = p.min_exp();
  const Rational lead = p.leading_coeff();
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.set_coeff(e - shift, c / lead);
  return out;
}

bool unit_equivalent(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return normalize(p) == normalize(q);
}

namespace {

// Classical division with remainder in Q[t]; callers shift operands so both
// have min exponent >= 0 and b != 0.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly a,
                                                const LaurentPoly& b) {
  LaurentPoly q;
  const long long deg_b = b.max_exp();
  const Rational lead_b = b.leading_coeff();
  while (!a.is_zero() && a.max_exp() >= deg_b) {
    const LaurentPoly term =
        LaurentPoly::monomial(a.leading_coeff() / lead_b, a.max_exp() - deg_b);
    q += term;
    a -= term * b;
  }
  return {q, a};
}

LaurentPoly shift_to_zero(const LaurentPoly& p) {
  LaurentPoly out;
  const long long shift = p.min_exp();
  for (const auto& [e, c] : p.terms()) out.set_coeff(e - shift, c);
  return out;
}

}  // namespace

bool divides(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) throw std::domain_error("divisibility by the zero polynomial is undefined");
  if (b.is_zero()) return true;
  if (b.degree_span() < a.degree_span()) return false;
  return poly_divmod(shift_to_zero(b), shift_to_zero(a)).second.is_zero();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  auto [q, r] = poly_divmod(shift_to_zero(a), shift_to_zero(b));
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q * LaurentPoly::monomial(Rational(1), a.min_exp() - b.min_exp());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  LaurentPoly x = normalize(a);
  LaurentPoly y = normalize(b);
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).second;
    x = y;
    y = r.is_zero() ? r : normalize(r);
  }
  return normalize(x);
}

}  // namespace alexobs
