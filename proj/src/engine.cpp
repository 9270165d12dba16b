#include "alexobs/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alexobs {

namespace {

const char* kCiteThm41 = "Theorem 4.1";
const char* kCiteThm42 = "Theorem 4.2";
const char* kCiteThm45 = "Theorem 4.5";
const char* kCiteThm47 = "Theorem 4.7";
const char* kCiteProp21 = "Proposition 2.1";
const char* kCiteProp49 = "Proposition 4.9";
const char* kCiteProp51 = "Proposition 5.1";
const char* kCiteProp52 = "Proposition 5.2";
const char* kCiteCor310 = "Corollary 3.10";
const char* kCiteCor53 = "Corollary 5.3";
const char* kCiteCor54 = "Corollary 5.4";
const char* kCiteDelta0 = "IH_0 = Gamma/(t-1)";
const char* kCiteVanishing = "Libgober, Lemma 1.5";
const char* kCiteEuler = "Milnor fiber Euler-product identity";

LaurentPoly t_minus_one() { return LaurentPoly::from_terms({{1, 1}, {0, -1}}); }

std::string orders_str(const std::set<long long>& orders) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long long e : orders) {
    if (!first) os << ", ";
    first = false;
    os << "Phi_" << e;
  }
  os << "}";
  return os.str();
}

// Strips every t-1 factor; used for bounds declared "up to (t-1)-powers".
LaurentPoly strip_phi1(LaurentPoly p) {
  const LaurentPoly phi1 = t_minus_one();
  while (!p.is_unit() && divides(phi1, p)) p = exact_div(p, phi1);
  return p;
}

// Per-component product of the middle-degree local polynomials over the
// singular strata of the given dimension; gcd over components.
LaurentPoly middle_product_bound(const HypersurfaceSpec& spec,
                                 int stratum_dim) {
  const int middle = spec.n - stratum_dim;
  std::optional<LaurentPoly> acc;
  for (const auto& comp : spec.components) {
    LaurentPoly product = LaurentPoly::one();
    for (const auto& stratum : spec.strata) {
      if (stratum.dim != stratum_dim) continue;
      if (stratum.link.type == LinkType::Smooth ||
          stratum.link.type == LinkType::ConePoint) {
        continue;
      }
      if (std::find(stratum.components.begin(), stratum.components.end(),
                    comp.name) == stratum.components.end()) {
        continue;
      }
      auto table = xi_table_for(spec, stratum);
      if (!table) {
        throw std::domain_error("stratum \"" + stratum.name +
                                "\" carries no local link data");
      }
      product *= table->at(middle);
    }
    acc = acc ? gcd(*acc, product) : normalize(product);
  }
  if (!acc) throw std::domain_error("no components in spec");
  return *acc;
}

int singular_locus_dim(const HypersurfaceSpec& spec) {
  int k = -1;
  for (const auto& stratum : spec.strata) {
    if (stratum.link.type == LinkType::Smooth) continue;
    k = std::max(k, stratum.dim);
  }
  return k;
}

std::string poly_str(const LaurentPoly& p) { return p.str(); }

}  // namespace

std::set<long long> default_probe_orders(const HypersurfaceSpec& spec) {
  std::set<long long> probe;
  for (long long e : divisors_of(spec.d)) probe.insert(e);
  for (long long hint : spec.cyclo_hints) {
    for (long long e : divisors_of(hint)) probe.insert(e);
  }
  for (const auto& stratum : spec.strata) {
    if (stratum.link.type != LinkType::Brieskorn) continue;
    const CycloDivisor div =
        brieskorn_divisor(BrieskornData{stratum.link.exponents});
    for (const auto& [m, c] : div.coeffs()) {
      (void)c;
      for (long long e : divisors_of(m)) probe.insert(e);
    }
  }
  return probe;
}

CandidateSet local_candidates(const HypersurfaceSpec& spec, int i,
                              const std::string& component) {
  if (i < 1 || i > spec.n) {
    throw std::invalid_argument("degree must satisfy 1 <= i <= n");
  }
  if (!find_component(spec, component)) {
    throw std::invalid_argument("unknown component \"" + component + "\"");
  }
  const std::set<long long> probe = default_probe_orders(spec);
  CandidateSet out;
  for (const auto& stratum : spec.strata) {
    if (std::find(stratum.components.begin(), stratum.components.end(),
                  component) == stratum.components.end()) {
      continue;
    }
    const int s = stratum.dim;
    if (s < spec.n - i) continue;
    const auto table = xi_table_for(spec, stratum);
    if (!table) continue;  // cone point: no local data, handled elsewhere
    const int l_lo = std::max(0, 2 * spec.n - 2 * s - i);
    const int l_hi = spec.n - s;
    for (int l = l_lo; l <= l_hi; ++l) {
      const LaurentPoly xi = table->at(l);
      if (xi.is_unit()) continue;
      const CycloFactorization fact = cyclo_factor(xi, probe);
      for (const auto& [e, mult] : fact.cyclotomic_part) {
        (void)mult;
        out.cyclo_orders.insert(e);
      }
      if (!fact.remainder.is_unit()) {
        out.opaque.push_back({normalize(fact.remainder), stratum.name, l});
      }
    }
  }
  return out;
}

CandidateSet candidates_all_components(const HypersurfaceSpec& spec, int i) {
  CandidateSet out;
  bool first = true;
  for (const auto& comp : spec.components) {
    CandidateSet c = local_candidates(spec, i, comp.name);
    if (first) {
      out = std::move(c);
      first = false;
      continue;
    }
    std::set<long long> kept;
    std::set_intersection(out.cyclo_orders.begin(), out.cyclo_orders.end(),
                          c.cyclo_orders.begin(), c.cyclo_orders.end(),
                          std::inserter(kept, kept.begin()));
    out.cyclo_orders = std::move(kept);
    std::vector<OpaqueFactor> surviving;
    for (const auto& entry : out.opaque) {
      const bool matched =
          std::any_of(c.opaque.begin(), c.opaque.end(),
                      [&entry](const OpaqueFactor& other) {
                        return unit_equivalent(entry.poly, other.poly);
                      });
      if (matched) surviving.push_back(entry);
    }
    out.opaque = std::move(surviving);
  }
  return out;
}

CandidateSet order_d_filter(const CandidateSet& c, long long d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  CandidateSet out;
  for (long long e : c.cyclo_orders) {
    if (d % e == 0) out.cyclo_orders.insert(e);
  }
  return out;
}

CandidateSet t_minus_one_exclusion(const CandidateSet& c,
                                   const HypersurfaceSpec& spec) {
  if (!(spec.flags.rational_homology_manifold &&
        spec.flags.no_codim_one_sing)) {
    return c;
  }
  CandidateSet out = c;
  out.cyclo_orders.erase(1);
  return out;
}

LaurentPoly isolated_product_bound(const HypersurfaceSpec& spec) {
  if (!spec.flags.isolated_singularities) {
    throw std::domain_error(
        "the local-product bound requires the isolated_singularities flag");
  }
  return middle_product_bound(spec, 0);
}

LaurentPoly infinity_bound_curve(long long d) {
  if (d < 2) throw std::domain_error("the curve bound at infinity requires d >= 2");
  return t_minus_one() *
         pow(LaurentPoly::t_power_minus_one(d),
             static_cast<unsigned long long>(d - 2));
}

long long rank_top(const HypersurfaceSpec& spec) {
  if (!spec.chi_complement) {
    throw std::domain_error("rank formula requires chi_complement");
  }
  const long long chi = *spec.chi_complement;
  const long long rank = (spec.n + 1) % 2 == 0 ? chi : -chi;
  if (rank < 0) {
    throw std::domain_error("inconsistent chi(U): rank must be >= 0");
  }
  return rank;
}

LaurentPoly euler_product_solve(const std::vector<LaurentPoly>& p,
                                long long chi_f, long long d, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (static_cast<int>(p.size()) != n) {
    throw std::invalid_argument("expected P_0..P_(n-1), got " +
                                std::to_string(p.size()) + " polynomials");
  }
  for (const auto& q : p) {
    if (q.is_zero()) throw std::domain_error("characteristic polynomials are nonzero");
  }
  if (chi_f % d != 0) {
    throw std::domain_error("chi(F) = " + std::to_string(chi_f) +
                            " is not divisible by d = " + std::to_string(d));
  }
  const long long m = -chi_f / d;  // exponent of (1 - t^d)
  const LaurentPoly base = LaurentPoly::from_terms({{0, 1}, {d, -1}});
  LaurentPoly num = LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  if (m >= 0) {
    num *= pow(base, static_cast<unsigned long long>(m));
  } else {
    den *= pow(base, static_cast<unsigned long long>(-m));
  }
  for (int q = 0; q < n; ++q) {
    // P_n^((-1)^(n+1)) = (1-t^d)^m * prod_q P_q^((-1)^q)
    if (q % 2 == 0) {
      num *= p[q];
    } else {
      den *= p[q];
    }
  }
  const bool n_odd = n % 2 == 1;
  const LaurentPoly& top = n_odd ? num : den;
  const LaurentPoly& bottom = n_odd ? den : num;
  if (!divides(bottom, top)) {
    throw std::domain_error(
        "inconsistent inputs: the Euler product forces a non-polynomial P_n");
  }
  return exact_div(top, bottom);
}

namespace {

struct FilterTrace {
  CandidateSet result;
  std::vector<AppliedRule> rules;
};

FilterTrace run_filters(const HypersurfaceSpec& spec, int i,
                        AnalysisMode mode) {
  FilterTrace trace;
  const CandidateSet raw = candidates_all_components(spec, i);
  {
    AppliedRule rule;
    rule.id = mode == AnalysisMode::Arrangement ? "arrangement-candidates"
                                                : "local-candidates";
    rule.citation = mode == AnalysisMode::Arrangement ? kCiteProp51 : kCiteThm42;
    std::ostringstream os;
    os << "prime factors of local polynomials over qualifying strata: "
       << orders_str(raw.cyclo_orders);
    for (const auto& op : raw.opaque) {
      os << "; non-cyclotomic factor " << op.poly.str() << " (stratum "
         << op.stratum << ", degree " << op.degree_l << ")";
    }
    rule.detail = os.str();
    trace.rules.push_back(std::move(rule));
  }

  const CandidateSet after41 = order_d_filter(raw, spec.d);
  {
    AppliedRule rule;
    rule.id = "order-d-filter";
    rule.citation = mode == AnalysisMode::Arrangement ? kCiteCor53 : kCiteThm41;
    std::set<long long> dropped;
    for (long long e : raw.cyclo_orders) {
      if (!after41.cyclo_orders.count(e)) dropped.insert(e);
    }
    std::ostringstream os;
    os << "roots must be roots of unity of order d = " << spec.d;
    if (!dropped.empty()) os << "; dropped " << orders_str(dropped);
    if (!raw.opaque.empty()) {
      os << "; dropped " << raw.opaque.size() << " non-cyclotomic factor(s)";
    }
    rule.detail = os.str();
    trace.rules.push_back(std::move(rule));
  }

  CandidateSet result = after41;
  if (mode == AnalysisMode::Hypersurface) {
    result = t_minus_one_exclusion(after41, spec);
    if (spec.flags.rational_homology_manifold &&
        spec.flags.no_codim_one_sing) {
      AppliedRule rule;
      rule.id = "t-minus-1-exclusion";
      rule.citation = kCiteProp21;
      rule.detail =
          "rational homology manifold without codimension-one singularities: "
          "delta_i(1) != 0, so Phi_1 is excluded";
      trace.rules.push_back(std::move(rule));
    }
  } else {
    const bool normal_crossing =
        std::any_of(spec.components.begin(), spec.components.end(),
                    [](const ComponentSpec& c) { return c.normal_crossing; });
    if (normal_crossing) {
      CandidateSet forced;
      if (result.cyclo_orders.count(1)) forced.cyclo_orders.insert(1);
      result = std::move(forced);
      AppliedRule rule;
      rule.id = "normal-crossing-trivial";
      rule.citation = kCiteCor54;
      rule.detail =
          "normal crossing along a component: the monodromy acts trivially in "
          "this range, so only Phi_1 may divide P_q";
      trace.rules.push_back(std::move(rule));
    }
  }
  trace.result = std::move(result);
  return trace;
}

DegreeReport fixed_degree_zero(AnalysisMode mode) {
  DegreeReport d0;
  d0.i = 0;
  d0.forced_value = t_minus_one();
  AppliedRule rule;
  rule.id = "degree-zero-fixed";
  rule.citation = kCiteDelta0;
  rule.detail = mode == AnalysisMode::Arrangement
                    ? "the Milnor fiber is connected, so P_0 = t - 1"
                    : "the infinite cyclic cover is connected, so delta_0 ~ t - 1";
  d0.applied_rules.push_back(std::move(rule));
  return d0;
}

void attach_annihilator(ObstructionReport* report, long long d) {
  report->minimal_poly_annihilator = LaurentPoly::t_power_minus_one(d);
  AppliedRule rule;
  rule.id = "semisimple-annihilator";
  rule.citation = kCiteProp49;
  rule.detail = "each module in the torsion range is semisimple and annihilated by t^" +
                std::to_string(d) + " - 1";
  report->global_rules.push_back(std::move(rule));
}

}  // namespace

ObstructionReport analyze(const HypersurfaceSpec& spec) {
  const auto errors = validate_spec(spec, AnalysisMode::Hypersurface);
  if (!errors.empty()) {
    std::ostringstream os;
    os << "invalid spec:";
    for (const auto& e : errors) os << "\n  " << e;
    throw std::runtime_error(os.str());
  }

  ObstructionReport report;
  report.mode = AnalysisMode::Hypersurface;
  report.n = spec.n;
  report.d = spec.d;
  for (const auto& c : spec.components) report.component_names.push_back(c.name);
  attach_annihilator(&report, spec.d);
  if (spec.chi_complement) {
    report.top_rank = rank_top(spec);
    AppliedRule rule;
    rule.id = "top-rank";
    rule.citation = kCiteCor310;
    rule.detail = "rank of the free module in degree n+1 is (-1)^(n+1) chi(U) = " +
                  std::to_string(*report.top_rank);
    report.global_rules.push_back(std::move(rule));
  }

  report.degrees.push_back(fixed_degree_zero(AnalysisMode::Hypersurface));

  const int k_sing = singular_locus_dim(spec);
  const bool vanishing_applies =
      spec.flags.no_codim_one_sing && k_sing >= 0 && spec.n - k_sing >= 2;
  std::optional<LaurentPoly> product_bound;
  if (spec.flags.isolated_singularities) product_bound = isolated_product_bound(spec);
  std::optional<LaurentPoly> curve_bound;
  if (spec.n == 1 && spec.components.size() == 1 && spec.d >= 2) {
    curve_bound = infinity_bound_curve(spec.d);
  }

  for (int i = 1; i <= spec.n; ++i) {
    FilterTrace trace = run_filters(spec, i, AnalysisMode::Hypersurface);
    DegreeReport dr;
    dr.i = i;
    dr.candidates = trace.result;
    dr.applied_rules = std::move(trace.rules);

    if (vanishing_applies && i < spec.n - k_sing) {
      // The vanishing statement overrides whatever the ranges produced; the
      // discarded orders stay visible in the rule details.
      dr.candidates = CandidateSet{};
      dr.forced_value = LaurentPoly::one();
      AppliedRule rule;
      rule.id = "low-degree-vanishing";
      rule.citation = kCiteVanishing;
      rule.detail = "H_i(U^c) = 0 for 1 <= i < n - k with k = " +
                    std::to_string(k_sing) + " the dimension of the singular locus";
      dr.applied_rules.push_back(std::move(rule));
    } else if (dr.candidates.empty()) {
      dr.forced_value = LaurentPoly::one();
      AppliedRule rule;
      rule.id = "forced-trivial";
      rule.citation = "Theorem 4.1 + Theorem 4.2 + Proposition 2.1";
      rule.detail = "no admissible prime factor survives the filters";
      dr.applied_rules.push_back(std::move(rule));
    } else if (dr.candidates.cyclo_orders.size() == 1 &&
               dr.candidates.opaque.empty() &&
               *dr.candidates.cyclo_orders.begin() != 1) {
      const long long e = *dr.candidates.cyclo_orders.begin();
      dr.informational_value = cyclotomic(e);
      dr.informational_note =
          "every prime factor is Phi_" + std::to_string(e) +
          "; if the module is nontrivial then delta_" + std::to_string(i) +
          " is a power of Phi_" + std::to_string(e);
      AppliedRule rule;
      rule.id = "singleton-candidate";
      rule.citation = kCiteThm42;
      rule.detail = dr.informational_note;
      dr.applied_rules.push_back(std::move(rule));
    }

    if (i == spec.n && product_bound) {
      DivisorBound bound;
      bound.poly = *product_bound;
      bound.up_to_t_minus_1_powers = true;
      bound.rule = {"isolated-product-bound", kCiteThm45,
                    "delta_n divides the product of the local polynomials of "
                    "the singular points (up to a power of t - 1)"};
      dr.divisor_bounds.push_back(std::move(bound));
    }
    if (i == spec.n && curve_bound) {
      DivisorBound bound;
      bound.poly = *curve_bound;
      bound.up_to_t_minus_1_powers = false;
      bound.rule = {"curve-bound-at-infinity", kCiteThm47,
                    "delta_1 divides the order (t-1)(t^d-1)^(d-2) of the "
                    "degree-1 module at infinity"};
      dr.divisor_bounds.push_back(std::move(bound));
    }
    report.degrees.push_back(std::move(dr));
  }
  return report;
}

ObstructionReport arrangement_analyze(const HypersurfaceSpec& spec) {
  const auto errors = validate_spec(spec, AnalysisMode::Arrangement);
  if (!errors.empty()) {
    std::ostringstream os;
    os << "invalid spec:";
    for (const auto& e : errors) os << "\n  " << e;
    throw std::runtime_error(os.str());
  }

  ObstructionReport report;
  report.mode = AnalysisMode::Arrangement;
  report.n = spec.n;
  report.d = spec.d;
  for (const auto& c : spec.components) report.component_names.push_back(c.name);
  attach_annihilator(&report, spec.d);
  if (spec.chi_complement) {
    report.top_rank = rank_top(spec);
    AppliedRule rule;
    rule.id = "top-rank";
    rule.citation = kCiteCor310;
    rule.detail = "rank of the free module in degree n+1 is (-1)^(n+1) chi(U) = " +
                  std::to_string(*report.top_rank);
    report.global_rules.push_back(std::move(rule));
  }

  report.degrees.push_back(fixed_degree_zero(AnalysisMode::Arrangement));

  std::optional<LaurentPoly> point_product_bound;
  if (spec.flags.isolated_singularities) {
    point_product_bound = middle_product_bound(spec, 1);
  }

  bool lower_determined = true;
  for (int q = 1; q <= spec.n - 1; ++q) {
    FilterTrace trace = run_filters(spec, q, AnalysisMode::Arrangement);
    DegreeReport dr;
    dr.i = q;
    dr.candidates = trace.result;
    dr.applied_rules = std::move(trace.rules);
    if (dr.candidates.empty()) {
      dr.forced_value = LaurentPoly::one();
      AppliedRule rule;
      rule.id = "forced-trivial";
      rule.citation = "Proposition 5.1 + Corollary 5.3";
      rule.detail = "no admissible prime factor survives the filters";
      dr.applied_rules.push_back(std::move(rule));
    } else if (dr.candidates.cyclo_orders.size() == 1 &&
               dr.candidates.opaque.empty() &&
               *dr.candidates.cyclo_orders.begin() != 1) {
      const long long e = *dr.candidates.cyclo_orders.begin();
      dr.informational_value = cyclotomic(e);
      dr.informational_note = "every prime factor is Phi_" + std::to_string(e);
      AppliedRule rule;
      rule.id = "singleton-candidate";
      rule.citation = kCiteProp51;
      rule.detail = dr.informational_note;
      dr.applied_rules.push_back(std::move(rule));
    }
    if (q == spec.n - 1 && point_product_bound) {
      DivisorBound bound;
      bound.poly = *point_product_bound;
      bound.up_to_t_minus_1_powers = true;
      bound.rule = {"isolated-product-bound", kCiteProp52,
                    "P_(n-1) divides the product of the local polynomials of "
                    "the isolated singular points (up to a power of t - 1)"};
      dr.divisor_bounds.push_back(std::move(bound));
    }
    if (!dr.forced_value) lower_determined = false;
    report.degrees.push_back(std::move(dr));
  }

  DegreeReport top;
  top.i = spec.n;
  if (spec.chi_milnor_fiber && lower_determined) {
    std::vector<LaurentPoly> lower;
    lower.push_back(t_minus_one());
    for (int q = 1; q <= spec.n - 1; ++q) {
      lower.push_back(*report.degrees[q].forced_value);
    }
    const LaurentPoly pn =
        euler_product_solve(lower, *spec.chi_milnor_fiber, spec.d, spec.n);
    top.forced_value = normalize(pn);
    AppliedRule rule;
    rule.id = "euler-product";
    rule.citation = kCiteEuler;
    rule.detail = "P_n recovered from chi(F) = " +
                  std::to_string(*spec.chi_milnor_fiber) +
                  " and the determined lower polynomials";
    top.applied_rules.push_back(std::move(rule));
  } else {
    AppliedRule rule;
    rule.id = "top-degree-undetermined";
    rule.citation = kCiteEuler;
    rule.detail =
        spec.chi_milnor_fiber
            ? "P_0..P_(n-1) are not all pinned down, so P_n is not recovered"
            : "chi(F) not supplied, so P_n is not recovered";
    top.applied_rules.push_back(std::move(rule));
  }
  report.degrees.push_back(std::move(top));
  return report;
}

ClaimCheck verify_claim(const HypersurfaceSpec& spec,
                        const ObstructionReport& report, int degree,
                        const LaurentPoly& claim) {
  ClaimCheck check;
  check.degree = degree;
  if (claim.is_zero()) {
    throw std::invalid_argument("claimed polynomials must be nonzero");
  }
  if (degree < 0 || degree > report.n) {
    throw std::invalid_argument("claim degree must lie in [0, n]");
  }

  auto reject = [&check](const std::string& id, const std::string& citation,
                         const std::string& message) {
    check.accepted = false;
    check.rule_id = id;
    check.citation = citation;
    check.message = message;
  };

  if (degree == 0) {
    if (!unit_equivalent(claim, t_minus_one())) {
      reject("degree-zero-fixed", kCiteDelta0,
             "delta_0 ~ t - 1 always; claim " + poly_str(normalize(claim)) +
                 " is not unit-equivalent to it");
    }
    return check;
  }

  std::set<long long> d_orders;
  for (long long e : divisors_of(spec.d)) d_orders.insert(e);
  const CycloFactorization fact = cyclo_factor(claim, d_orders);
  if (!fact.remainder.is_unit()) {
    reject("order-d-filter", kCiteThm41,
           "claim has factor " + poly_str(normalize(fact.remainder)) +
               " whose roots are not roots of unity of order d = " +
               std::to_string(spec.d));
    return check;
  }

  const DegreeReport& dr = report.degrees.at(degree);
  const bool rhm_exclusion_active =
      spec.flags.rational_homology_manifold && spec.flags.no_codim_one_sing &&
      report.mode == AnalysisMode::Hypersurface;
  if (fact.cyclotomic_part.count(1) && rhm_exclusion_active) {
    reject("t-minus-1-exclusion", kCiteProp21,
           "claim vanishes at t = 1, but delta_i(1) != 0 for a rational "
           "homology manifold without codimension-one singularities");
    return check;
  }

  if (dr.forced_value && !unit_equivalent(claim, *dr.forced_value)) {
    std::string id = "forced-value";
    std::string citation = kCiteThm42;
    for (const auto& rule : dr.applied_rules) {
      if (rule.id == "low-degree-vanishing" || rule.id == "forced-trivial" ||
          rule.id == "euler-product") {
        id = rule.id;
        citation = rule.citation;
      }
    }
    reject(id, citation,
           "the filters force this degree to " + poly_str(*dr.forced_value) +
               ", claim is " + poly_str(normalize(claim)));
    return check;
  }

  if (!dr.forced_value) {
    for (const auto& [e, mult] : fact.cyclotomic_part) {
      (void)mult;
      if (!dr.candidates.cyclo_orders.count(e)) {
        reject("local-candidates", kCiteThm42,
               "Phi_" + std::to_string(e) +
                   " is not a prime factor of any qualifying local polynomial; "
                   "admissible orders are " + orders_str(dr.candidates.cyclo_orders));
        return check;
      }
    }
  }

  for (const auto& bound : dr.divisor_bounds) {
    LaurentPoly lhs = normalize(claim);
    LaurentPoly rhs = normalize(bound.poly);
    if (bound.up_to_t_minus_1_powers) {
      lhs = strip_phi1(lhs);
      rhs = strip_phi1(rhs);
    }
    if (!divides(lhs, rhs)) {
      reject(bound.rule.id, bound.rule.citation,
             "claim does not divide the bound " + poly_str(normalize(bound.poly)) +
                 (bound.up_to_t_minus_1_powers ? " (up to powers of t - 1)" : ""));
      return check;
    }
  }
  return check;
}

}  // namespace alexobs
