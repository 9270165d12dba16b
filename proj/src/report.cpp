#include "alexobs/report.hpp"

#include <sstream>

#include "alexobs/poly_io.hpp"

namespace alexobs {

namespace {

std::string degree_symbol(const ObstructionReport& report, int i) {
  const char* base =
      report.mode == AnalysisMode::Arrangement ? "P_" : "δ_";  // delta
  return base + std::to_string(i);
}

std::string orders_text(const std::set<long long>& orders) {
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

std::string conclusion_of(const ObstructionReport& report,
                          const DegreeReport& dr) {
  const std::string sym = degree_symbol(report, dr.i);
  if (dr.forced_value) {
    std::string text = sym + " ∼ " + dr.forced_value->str();
    if (dr.i > 0) text += " (forced)";
    return text;
  }
  if (dr.informational_value) {
    return sym + " ∼ " + dr.informational_value->str() +
           " (informational: sole admissible prime)";
  }
  if (dr.candidates.empty() && dr.applied_rules.size() == 1 &&
      dr.applied_rules[0].id == "top-degree-undetermined") {
    return sym + ": not recovered";
  }
  return sym + ": candidate primes " + orders_text(dr.candidates.cyclo_orders);
}

}  // namespace

std::string render_text(const ObstructionReport& report) {
  std::ostringstream os;
  const bool arrangement = report.mode == AnalysisMode::Arrangement;
  os << "obstruction report ("
     << (arrangement ? "arrangement" : "hypersurface") << " mode)\n";
  if (arrangement) {
    os << "projective cone of dimension n = " << report.n
       << " over an arrangement of degree d = " << report.d << "\n";
  } else {
    os << "V in CP^" << report.n + 1 << ": n = " << report.n
       << ", d = " << report.d << "\n";
  }
  os << "components:";
  for (const auto& name : report.component_names) os << " " << name;
  os << "\n";
  os << "minimal polynomial constraint: annihilated by "
     << report.minimal_poly_annihilator.str() << "  [Proposition 4.9]\n";
  if (report.top_rank) {
    os << "rank of the degree-" << report.n + 1
       << " free module: " << *report.top_rank << "  [Corollary 3.10]\n";
  }
  for (const auto& rule : report.global_rules) {
    os << "  - " << rule.id << " [" << rule.citation << "]: " << rule.detail
       << "\n";
  }
  os << "\n";

  for (const auto& dr : report.degrees) {
    os << "degree " << dr.i << ": " << conclusion_of(report, dr) << "\n";
    if (!dr.candidates.opaque.empty()) {
      os << "  surviving non-cyclotomic factors:";
      for (const auto& op : dr.candidates.opaque) {
        os << " [" << op.poly.str() << " from " << op.stratum << ", l=" << op.degree_l << "]";
      }
      os << "\n";
    }
    for (const auto& bound : dr.divisor_bounds) {
      os << "  divides " << bound.poly.str()
         << (bound.up_to_t_minus_1_powers ? " up to a power of t - 1" : "")
         << "  [" << bound.rule.citation << "]\n";
    }
    for (const auto& rule : dr.applied_rules) {
      os << "  - " << rule.id << " [" << rule.citation << "]: " << rule.detail
         << "\n";
    }
  }

  os << "\nconclusions: ";
  bool first = true;
  for (const auto& dr : report.degrees) {
    if (!first) os << ", ";
    first = false;
    os << conclusion_of(report, dr);
  }
  os << "\n";
  return os.str();
}

nlohmann::ordered_json render_json(const ObstructionReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = "alexobs-report-v1";
  doc["mode"] = report.mode == AnalysisMode::Arrangement ? "arrangement"
                                                         : "hypersurface";
  doc["n"] = report.n;
  doc["d"] = report.d;
  doc["components"] = report.component_names;
  doc["minimal_poly_divides"] = poly_to_json(report.minimal_poly_annihilator);
  if (report.top_rank) {
    doc["top_rank"] = *report.top_rank;
  } else {
    doc["top_rank"] = nullptr;
  }
  doc["global_rules"] = nlohmann::ordered_json::array();
  for (const auto& rule : report.global_rules) {
    doc["global_rules"].push_back(
        {{"id", rule.id}, {"citation", rule.citation}, {"detail", rule.detail}});
  }
  doc["degrees"] = nlohmann::ordered_json::array();
  for (const auto& dr : report.degrees) {
    nlohmann::ordered_json jd;
    jd["i"] = dr.i;
    jd["symbol"] = (report.mode == AnalysisMode::Arrangement ? "P_" : "delta_") +
                   std::to_string(dr.i);
    nlohmann::ordered_json cands;
    cands["cyclo_orders"] = dr.candidates.cyclo_orders;
    cands["opaque"] = nlohmann::ordered_json::array();
    for (const auto& op : dr.candidates.opaque) {
      cands["opaque"].push_back({{"poly", poly_to_json(op.poly)},
                                 {"stratum", op.stratum},
                                 {"l", op.degree_l}});
    }
    jd["candidates"] = std::move(cands);
    jd["forced_value"] =
        dr.forced_value ? poly_to_json(*dr.forced_value)
                        : nlohmann::ordered_json(nullptr);
    jd["informational_value"] =
        dr.informational_value ? poly_to_json(*dr.informational_value)
                               : nlohmann::ordered_json(nullptr);
    jd["informational_note"] = dr.informational_note;
    jd["divisor_bounds"] = nlohmann::ordered_json::array();
    for (const auto& bound : dr.divisor_bounds) {
      jd["divisor_bounds"].push_back(
          {{"poly", poly_to_json(bound.poly)},
           {"up_to_t_minus_1_powers", bound.up_to_t_minus_1_powers},
           {"rule", bound.rule.id},
           {"citation", bound.rule.citation}});
    }
    jd["applied_rules"] = nlohmann::ordered_json::array();
    for (const auto& rule : dr.applied_rules) {
      jd["applied_rules"].push_back({{"id", rule.id},
                                     {"citation", rule.citation},
                                     {"detail", rule.detail}});
    }
    doc["degrees"].push_back(std::move(jd));
  }
  return doc;
}

}  // namespace alexobs
