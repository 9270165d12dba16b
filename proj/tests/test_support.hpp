#pragma once

// Shared helpers for the test suites: deterministic random generators for
// polynomials, divisors and specs, plus the independent oracles (exact
// rational-angle root bookkeeping and the Moebius construction of
// cyclotomics) used to cross-check the divisor calculus.

#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "alexobs/cyclo.hpp"
#include "alexobs/laurent.hpp"
#include "alexobs/milnor.hpp"

namespace testsupport {

using alexobs::CycloDivisor;
using alexobs::LaurentPoly;
using alexobs::Rational;

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  return dist(rng);
}

inline LaurentPoly random_poly(Rng& rng, int max_terms = 4,
                               long long max_abs_exp = 4,
                               long long max_abs_coeff = 5) {
  LaurentPoly p;
  const int terms = static_cast<int>(rand_int(rng, 0, max_terms));
  for (int i = 0; i < terms; ++i) {
    const long long e = rand_int(rng, -max_abs_exp, max_abs_exp);
    const long long num = rand_int(rng, -max_abs_coeff, max_abs_coeff);
    const long long den = rand_int(rng, 1, 3);
    p += LaurentPoly::monomial(alexobs::make_rational(num, den), e);
  }
  return p;
}

inline LaurentPoly random_nonzero_poly(Rng& rng, int max_terms = 4) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms);
    if (!p.is_zero()) return p;
  }
}

// Random product of small factors (t - a), t^m - 1 and monomials; useful for
// gcd/divisibility laws where interesting common factors are needed.
inline LaurentPoly random_factored_poly(Rng& rng, int max_factors = 3) {
  LaurentPoly p = LaurentPoly::monomial(
      alexobs::make_rational(rand_int(rng, 1, 3), 1), rand_int(rng, -2, 2));
  const int factors = static_cast<int>(rand_int(rng, 0, max_factors));
  for (int i = 0; i < factors; ++i) {
    switch (rand_int(rng, 0, 2)) {
      case 0:
        p *= LaurentPoly::from_terms({{1, 1}, {0, -rand_int(rng, 1, 3)}});
        break;
      case 1:
        p *= LaurentPoly::t_power_minus_one(rand_int(rng, 1, 4));
        break;
      default:
        p *= alexobs::cyclotomic(rand_int(rng, 1, 8));
        break;
    }
  }
  return p;
}

// A signed multiset of exact rational angles k/m (reduced, in [0, 1)).
using AngleMultiset = std::map<std::pair<long long, long long>, long long>;

inline void add_angle(AngleMultiset* angles, long long num, long long den,
                      long long count) {
  num %= den;
  if (num < 0) num += den;
  const long long g = std::gcd(num == 0 ? den : num, den);
  const auto key = std::make_pair(num / g, den / g);
  (*angles)[key] += count;
  if ((*angles)[key] == 0) angles->erase(key);
}

// Roots of unity named by a divisor: Lambda_m contributes every k/m.
inline AngleMultiset divisor_angles(const CycloDivisor& d) {
  AngleMultiset angles;
  for (const auto& [m, c] : d.coeffs()) {
    for (long long k = 0; k < m; ++k) add_angle(&angles, k, m, c);
  }
  return angles;
}

// Brute-force product: all pairwise sums of angles mod 1.
inline AngleMultiset angle_product(const AngleMultiset& a,
                                   const AngleMultiset& b) {
  AngleMultiset out;
  for (const auto& [qa, ca] : a) {
    for (const auto& [qb, cb] : b) {
      const long long den = std::lcm(qa.second, qb.second);
      const long long num =
          qa.first * (den / qa.second) + qb.first * (den / qb.second);
      add_angle(&out, num, den, ca * cb);
    }
  }
  return out;
}

// Phi_e via the Moebius product prod_{f|e} (t^f - 1)^{mu(e/f)}, an
// independent route from the library's divide-out recursion.
inline LaurentPoly moebius_cyclotomic(long long e) {
  auto mu = [](long long v) {
    long long result = 1;
    for (long long p = 2; p * p <= v; ++p) {
      if (v % p == 0) {
        v /= p;
        if (v % p == 0) return 0LL;
        result = -result;
      }
    }
    if (v > 1) result = -result;
    return result;
  };
  LaurentPoly num = LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  for (long long f : alexobs::divisors_of(e)) {
    const long long m = mu(e / f);
    if (m == 1) num *= LaurentPoly::t_power_minus_one(f);
    if (m == -1) den *= LaurentPoly::t_power_minus_one(f);
  }
  return alexobs::exact_div(num, den);
}

// Eigenvalue-enumeration oracle for Brieskorn links: for each tuple (k_i),
// 1 <= k_i <= a_i - 1, the monodromy eigenvalue is exp(2 pi i sum k_i / a_i).
// Angles are grouped into full primitive orbits and rebuilt from
// Moebius-constructed cyclotomics.
inline LaurentPoly oracle_brieskorn_charpoly(
    const std::vector<long long>& exponents, bool* uniform_orbits = nullptr) {
  AngleMultiset angles;
  std::vector<long long> tuple(exponents.size(), 1);
  for (;;) {
    long long den = 1;
    long long num = 0;
    for (size_t i = 0; i < exponents.size(); ++i) {
      const long long g = std::gcd(den, exponents[i]);
      const long long next_den = den / g * exponents[i];
      num = num * (next_den / den) + tuple[i] * (next_den / exponents[i]);
      den = next_den;
    }
    add_angle(&angles, num, den, 1);
    size_t pos = 0;
    while (pos < tuple.size() && tuple[pos] == exponents[pos] - 1) {
      tuple[pos] = 1;
      ++pos;
    }
    if (pos == tuple.size()) break;
    ++tuple[pos];
  }

  // Group by the order of the root; a rational-coefficient polynomial needs
  // every primitive e-th root with a uniform multiplicity.
  std::map<long long, std::map<long long, long long>> by_order;
  for (const auto& [q, c] : angles) by_order[q.second][q.first] = c;
  if (uniform_orbits) *uniform_orbits = true;
  LaurentPoly out = LaurentPoly::one();
  for (const auto& [e, counts] : by_order) {
    long long phi_e = 0;  // Euler totient
    for (long long k = e == 1 ? 0 : 1; k < std::max<long long>(e, 1); ++k) {
      if (std::gcd(k == 0 ? e : k, e) == 1) ++phi_e;
    }
    if (e == 1) phi_e = 1;
    const long long mult = counts.begin()->second;
    bool uniform = static_cast<long long>(counts.size()) == phi_e;
    for (const auto& [num, c] : counts) {
      (void)num;
      if (c != mult) uniform = false;
    }
    if (!uniform && uniform_orbits) *uniform_orbits = false;
    out *= alexobs::pow(moebius_cyclotomic(e),
                        static_cast<unsigned long long>(mult));
  }
  return out;
}

inline std::string env_or(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value ? std::string(value) : fallback;
}

}  // namespace testsupport
