#include "alexobs/milnor.hpp"

#include <stdexcept>
#include <string>

namespace alexobs {

void validate_brieskorn(const BrieskornData& b) {
  if (b.exponents.empty()) {
    throw std::invalid_argument("Brieskorn data needs at least one exponent");
  }
  for (long long a : b.exponents) {
    if (a < 2) {
      throw std::invalid_argument("Brieskorn exponent " + std::to_string(a) +
                                  " is below 2");
    }
  }
}

CycloDivisor brieskorn_divisor(const BrieskornData& b) {
  validate_brieskorn(b);
  CycloDivisor out = CycloDivisor::lambda(1);
  for (long long a : b.exponents) {
    out *= CycloDivisor::lambda(a) - CycloDivisor::lambda(1);
  }
  return out;
}

LaurentPoly brieskorn_charpoly(const BrieskornData& b) {
  return divisor_to_poly(brieskorn_divisor(b));
}

CycloDivisor join_divisor(const CycloDivisor& d1, const CycloDivisor& d2) {
  return div_mul(d1, d2);
}

bool is_rhs_link(const BrieskornData& b) {
  return brieskorn_divisor(b).net_phi_multiplicity(1) == 0;
}

}  // namespace alexobs
