#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alexobs/cyclo.hpp"
#include "alexobs/strata.hpp"

namespace alexobs {

// A non-cyclotomic local factor carried with its provenance. These survive
// candidate collection but are always annihilated by the order-d filter.
struct OpaqueFactor {
  LaurentPoly poly;  // normalized
  std::string stratum;
  int degree_l = 0;
};

// Candidate prime factors for one global polynomial: Phi_e for each listed
// order, plus opaque leftovers.
struct CandidateSet {
  std::set<long long> cyclo_orders;
  std::vector<OpaqueFactor> opaque;

  bool empty() const { return cyclo_orders.empty() && opaque.empty(); }
};

struct AppliedRule {
  std::string id;
  std::string citation;
  std::string detail;
};

struct DivisorBound {
  LaurentPoly poly;
  bool up_to_t_minus_1_powers = false;
  AppliedRule rule;
};

struct DegreeReport {
  int i = 0;
  CandidateSet candidates;
  std::optional<LaurentPoly> forced_value;
  std::optional<LaurentPoly> informational_value;
  std::string informational_note;
  std::vector<DivisorBound> divisor_bounds;
  std::vector<AppliedRule> applied_rules;
};

struct ObstructionReport {
  AnalysisMode mode = AnalysisMode::Hypersurface;
  int n = 0;
  long long d = 0;
  std::vector<std::string> component_names;
  std::vector<DegreeReport> degrees;  // indices 0..n
  std::optional<long long> top_rank;
  LaurentPoly minimal_poly_annihilator;  // t^d - 1
  std::vector<AppliedRule> global_rules;
};

// Orders probed during factor collection: divisors of d, of every order in
// the Lambda-support of a Brieskorn stratum divisor, and of every order named
// by a "cyclo" input encoding.
std::set<long long> default_probe_orders(const HypersurfaceSpec& spec);

// Prime factors of the xi^s_l tables of strata inside `component`, over the
// ranges n-i <= s <= n and max(0, 2n-2s-i) <= l <= n-s.
CandidateSet local_candidates(const HypersurfaceSpec& spec, int i,
                              const std::string& component);

// Intersection over all components; opaque entries survive only when a
// unit-equivalent remainder shows up for every component.
CandidateSet candidates_all_components(const HypersurfaceSpec& spec, int i);

// Keeps exactly the orders dividing d and drops every opaque entry.
CandidateSet order_d_filter(const CandidateSet& c, long long d);

// Removes the order-1 class (t - 1) for rational homology manifolds without
// codimension-one singularities; identity otherwise.
CandidateSet t_minus_one_exclusion(const CandidateSet& c, const HypersurfaceSpec& spec);

// Isolated singularities: gcd over components of the product of the local
// middle-degree polynomials of the singular points in that component. The
// top polynomial divides it up to a power of (t-1).
LaurentPoly isolated_product_bound(const HypersurfaceSpec& spec);

// Order of the degree-1 module at infinity of an irreducible plane curve in
// general position: (t-1)(t^d-1)^(d-2); delta_1 divides it.
LaurentPoly infinity_bound_curve(long long d);

// (-1)^(n+1) * chi(U) = rank of the free module in degree n+1.
long long rank_top(const HypersurfaceSpec& spec);

// Solves prod_{q=0..n} P_q(t)^((-1)^(q+1)) = (1 - t^d)^(-chi_F / d) for P_n,
// given P_0..P_(n-1), by exact rational-function arithmetic.
LaurentPoly euler_product_solve(const std::vector<LaurentPoly>& p,
                                long long chi_f, long long d, int n);

// The full hypersurface pipeline: fixed delta_0, candidate collection and
// filters for 1 <= i <= n, divisor bounds, rank and annihilator constraints.
ObstructionReport analyze(const HypersurfaceSpec& spec);

// Monodromy pipeline for the Milnor fiber of an arrangement (the input
// describes the projective cone): candidates for P_q, q <= n-1, the
// normal-crossing and isolated-singularity consequences, and Euler-product
// recovery of P_n when the lower polynomials are pinned down.
ObstructionReport arrangement_analyze(const HypersurfaceSpec& spec);

struct ClaimCheck {
  bool accepted = true;
  int degree = 0;
  std::string rule_id;
  std::string citation;
  std::string message;
};

// Checks a claimed value of delta_i against every applicable filter and
// divisor bound (up to unit-equivalence, with the declared (t-1) slack).
ClaimCheck verify_claim(const HypersurfaceSpec& spec,
                        const ObstructionReport& report, int degree,
                        const LaurentPoly& claim);

}  // namespace alexobs
