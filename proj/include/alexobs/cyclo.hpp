#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "alexobs/laurent.hpp"

namespace alexobs {

// The e-th cyclotomic polynomial, from t^e - 1 = prod_{f | e} Phi_f by exact
// division. Cached; e >= 1.
LaurentPoly cyclotomic(long long e);

// Divisors of m in increasing order (m >= 1).
std::vector<long long> divisors_of(long long m);

// A formal integer combination sum c_m * Lambda_m, where Lambda_m stands for
// the divisor of t^m - 1 (all m-th roots of unity, each once). Products obey
// Lambda_a * Lambda_b = gcd(a,b) * Lambda_lcm(a,b): the multiset of pairwise
// products of an a-th and a b-th root of unity.
class CycloDivisor {
 public:
  CycloDivisor() = default;  // the zero divisor

  static CycloDivisor lambda(long long a);  // {a: 1}, a >= 1

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long long, long long>& coeffs() const { return coeffs_; }
  long long multiplicity(long long m) const;
  void add(long long m, long long mult);

  CycloDivisor operator-() const;
  CycloDivisor& operator+=(const CycloDivisor& rhs);
  CycloDivisor& operator-=(const CycloDivisor& rhs);
  CycloDivisor& operator*=(const CycloDivisor& rhs);

  // Net multiplicity of Phi_e, i.e. sum of c_m over m divisible by e.
  long long net_phi_multiplicity(long long e) const;
  // e -> net Phi_e multiplicity, over all divisors of the support; zero
  // entries dropped.
  std::map<long long, long long> phi_expansion() const;
  // Total number of roots counted with multiplicity: sum c_m * m. This is the
  // degree of the associated polynomial when the divisor is realizable.
  long long root_count() const;

  bool operator==(const CycloDivisor& rhs) const = default;

  std::string str() const;

 private:
  std::map<long long, long long> coeffs_;
};

CycloDivisor operator+(CycloDivisor lhs, const CycloDivisor& rhs);
CycloDivisor operator-(CycloDivisor lhs, const CycloDivisor& rhs);
CycloDivisor operator*(CycloDivisor lhs, const CycloDivisor& rhs);
std::ostream& operator<<(std::ostream& os, const CycloDivisor& d);

CycloDivisor div_mul(const CycloDivisor& a, const CycloDivisor& b);

// A divisor is realizable as a polynomial iff every Phi_e has net
// multiplicity >= 0.
bool is_realizable(const CycloDivisor& d);

// prod_m (t^m - 1)^{c_m}, computed as prod_e Phi_e^{net_e}. Throws
// std::domain_error naming the smallest e with negative net multiplicity.
LaurentPoly divisor_to_poly(const CycloDivisor& d);

struct CycloFactorization {
  std::map<long long, long long> cyclotomic_part;  // e -> multiplicity >= 1
  LaurentPoly remainder;  // no Phi_e factor for probed e
  std::set<long long> probed_orders;

  LaurentPoly reassembled() const;  // prod Phi_e^mult * remainder
};

// Peels off Phi_e factors for every probed order, with multiplicity, by
// repeated exact division. p != 0.
CycloFactorization cyclo_factor(const LaurentPoly& p,
                                const std::set<long long>& orders);

}  // namespace alexobs
