#pragma once

#include <vector>

#include "alexobs/cyclo.hpp"
#include "alexobs/laurent.hpp"

namespace alexobs {

// A Brieskorn singularity x_1^{a_1} + ... + x_m^{a_m} = 0; the monodromy
// eigenvalues on the middle reduced homology of its Milnor fiber are the
// products of nontrivial a_i-th roots of unity.
struct BrieskornData {
  std::vector<long long> exponents;  // length >= 1, each a_i >= 2
};

// Throws std::invalid_argument on malformed data.
void validate_brieskorn(const BrieskornData& b);

// The Milnor-Orlik product prod_i (Lambda_{a_i} - Lambda_1).
CycloDivisor brieskorn_divisor(const BrieskornData& b);

// Characteristic polynomial of the monodromy on the middle reduced homology
// of the Milnor fiber; degree prod (a_i - 1).
LaurentPoly brieskorn_charpoly(const BrieskornData& b);

// Monodromy eigenvalues of a join of Milnor fibers multiply.
CycloDivisor join_divisor(const CycloDivisor& d1, const CycloDivisor& d2);

// The link is a rational homology sphere iff 1 is not a monodromy eigenvalue,
// i.e. the net Phi_1 multiplicity of the Brieskorn divisor vanishes.
bool is_rhs_link(const BrieskornData& b);

}  // namespace alexobs
