#include "alexobs/strata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "alexobs/poly_io.hpp"

namespace alexobs {

namespace {

using nlohmann::json;

constexpr long long kMaxExponentLcm = 1'000'000'000'000LL;

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw std::invalid_argument(where + ": " + msg);
}

void expect_keys(const json& j, const std::set<std::string>& allowed,
                 const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) fail(where, "unknown field \"" + key + "\"");
  }
}

const json& require(const json& j, const std::string& key,
                    const std::string& where) {
  if (!j.contains(key)) fail(where, "missing field \"" + key + "\"");
  return j.at(key);
}

long long require_int(const json& j, const std::string& key,
                      const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<long long>();
}

std::string require_string(const json& j, const std::string& key,
                           const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

bool optional_bool(const json& j, const std::string& key,
                   const std::string& where) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) fail(where + "." + key, "expected a boolean");
  return j.at(key).get<bool>();
}

LinkData parse_link(const json& j, const std::string& where,
                    std::set<long long>* hints) {
  if (!j.is_object()) fail(where, "expected an object");
  const std::string type = require_string(j, "type", where);
  LinkData link;
  if (type == "smooth") {
    expect_keys(j, {"type"}, where);
    link.type = LinkType::Smooth;
  } else if (type == "brieskorn") {
    expect_keys(j, {"type", "exponents"}, where);
    link.type = LinkType::Brieskorn;
    const json& exps = require(j, "exponents", where);
    if (!exps.is_array()) fail(where + ".exponents", "expected an array");
    for (const auto& e : exps) {
      if (!e.is_number_integer()) fail(where + ".exponents", "expected integers");
      link.exponents.push_back(e.get<long long>());
    }
  } else if (type == "explicit") {
    expect_keys(j, {"type", "xi"}, where);
    link.type = LinkType::Explicit;
    const json& xi = require(j, "xi", where);
    if (!xi.is_object()) fail(where + ".xi", "expected an object of degree -> polynomial");
    for (const auto& [key, value] : xi.items()) {
      int l = 0;
      try {
        size_t pos = 0;
        l = std::stoi(key, &pos);
        if (pos != key.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail(where + ".xi", "key \"" + key + "\" is not a degree");
      }
      if (l < 0) fail(where + ".xi", "degrees must be >= 0");
      link.xi[l] = poly_from_json(value, where + ".xi." + key, hints);
    }
  } else if (type == "cone_point") {
    expect_keys(j, {"type"}, where);
    link.type = LinkType::ConePoint;
  } else {
    fail(where + ".type", "unknown link type \"" + type + "\"");
  }
  return link;
}

std::pair<int, int> line_col_of(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::optional<long long> exponent_lcm(const std::vector<long long>& exps) {
  long long l = 1;
  for (long long a : exps) {
    if (a < 1) return std::nullopt;
    const long long g = std::gcd(l, a);
    const __int128 next = static_cast<__int128>(l / g) * a;
    if (next > kMaxExponentLcm) return std::nullopt;
    l = static_cast<long long>(next);
  }
  return l;
}

}  // namespace

HypersurfaceSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    const auto [line, col] = line_col_of(text, err.byte > 0 ? err.byte - 1 : 0);
    throw std::invalid_argument("parse error at line " + std::to_string(line) +
                                ", column " + std::to_string(col) + ": " +
                                err.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("spec: expected a JSON object");

  expect_keys(doc,
              {"n", "d", "components", "strata", "flags", "chi_complement",
               "chi_milnor_fiber"},
              "spec");

  HypersurfaceSpec spec;
  spec.n = static_cast<int>(require_int(doc, "n", "spec"));
  spec.d = require_int(doc, "d", "spec");

  const json& comps = require(doc, "components", "spec");
  if (!comps.is_array()) fail("spec.components", "expected an array");
  for (size_t idx = 0; idx < comps.size(); ++idx) {
    const std::string where = "spec.components[" + std::to_string(idx) + "]";
    const json& c = comps.at(idx);
    if (!c.is_object()) fail(where, "expected an object");
    expect_keys(c, {"name", "degree", "normal_crossing"}, where);
    ComponentSpec comp;
    comp.name = require_string(c, "name", where);
    comp.degree = require_int(c, "degree", where);
    comp.normal_crossing = optional_bool(c, "normal_crossing", where);
    spec.components.push_back(std::move(comp));
  }

  const json& strata = require(doc, "strata", "spec");
  if (!strata.is_array()) fail("spec.strata", "expected an array");
  for (size_t idx = 0; idx < strata.size(); ++idx) {
    const std::string where = "spec.strata[" + std::to_string(idx) + "]";
    const json& s = strata.at(idx);
    if (!s.is_object()) fail(where, "expected an object");
    expect_keys(s, {"name", "dim", "components", "link"}, where);
    StratumSpec stratum;
    stratum.name = require_string(s, "name", where);
    stratum.dim = static_cast<int>(require_int(s, "dim", where));
    const json& members = require(s, "components", where);
    if (!members.is_array()) fail(where + ".components", "expected an array");
    for (const auto& m : members) {
      if (!m.is_string()) fail(where + ".components", "expected strings");
      stratum.components.push_back(m.get<std::string>());
    }
    stratum.link = parse_link(require(s, "link", where), where + ".link",
                              &spec.cyclo_hints);
    spec.strata.push_back(std::move(stratum));
  }

  const json& flags = require(doc, "flags", "spec");
  if (!flags.is_object()) fail("spec.flags", "expected an object");
  expect_keys(flags,
              {"rational_homology_manifold", "no_codim_one_sing",
               "isolated_singularities"},
              "spec.flags");
  spec.flags.rational_homology_manifold =
      optional_bool(flags, "rational_homology_manifold", "spec.flags");
  spec.flags.no_codim_one_sing =
      optional_bool(flags, "no_codim_one_sing", "spec.flags");
  spec.flags.isolated_singularities =
      optional_bool(flags, "isolated_singularities", "spec.flags");

  if (doc.contains("chi_complement")) {
    spec.chi_complement = require_int(doc, "chi_complement", "spec");
  }
  if (doc.contains("chi_milnor_fiber")) {
    spec.chi_milnor_fiber = require_int(doc, "chi_milnor_fiber", "spec");
  }
  return spec;
}

std::string serialize_spec(const HypersurfaceSpec& spec) {
  nlohmann::ordered_json doc;
  doc["n"] = spec.n;
  doc["d"] = spec.d;
  doc["components"] = nlohmann::ordered_json::array();
  for (const auto& c : spec.components) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["degree"] = c.degree;
    if (c.normal_crossing) jc["normal_crossing"] = true;
    doc["components"].push_back(std::move(jc));
  }
  doc["strata"] = nlohmann::ordered_json::array();
  for (const auto& s : spec.strata) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["dim"] = s.dim;
    js["components"] = s.components;
    nlohmann::ordered_json link;
    switch (s.link.type) {
      case LinkType::Smooth:
        link["type"] = "smooth";
        break;
      case LinkType::Brieskorn:
        link["type"] = "brieskorn";
        link["exponents"] = s.link.exponents;
        break;
      case LinkType::Explicit: {
        link["type"] = "explicit";
        nlohmann::ordered_json xi;
        for (const auto& [l, p] : s.link.xi) {
          xi[std::to_string(l)] = poly_to_json(p);
        }
        link["xi"] = std::move(xi);
        break;
      }
      case LinkType::ConePoint:
        link["type"] = "cone_point";
        break;
    }
    js["link"] = std::move(link);
    doc["strata"].push_back(std::move(js));
  }
  doc["flags"] = {
      {"rational_homology_manifold", spec.flags.rational_homology_manifold},
      {"no_codim_one_sing", spec.flags.no_codim_one_sing},
      {"isolated_singularities", spec.flags.isolated_singularities}};
  if (spec.chi_complement) doc["chi_complement"] = *spec.chi_complement;
  if (spec.chi_milnor_fiber) doc["chi_milnor_fiber"] = *spec.chi_milnor_fiber;
  return doc.dump(2) + "\n";
}

std::vector<std::string> validate_spec(const HypersurfaceSpec& spec,
                                       AnalysisMode mode) {
  std::vector<std::string> errors;
  auto err = [&errors](const std::string& path, const std::string& msg) {
    errors.push_back(path + ": " + msg);
  };

  if (spec.n < 1) err("n", "must be >= 1");
  if (spec.d < 1) err("d", "must be >= 1");

  std::set<std::string> comp_names;
  long long degree_sum = 0;
  for (size_t i = 0; i < spec.components.size(); ++i) {
    const auto& c = spec.components[i];
    const std::string path = "components[" + std::to_string(i) + "]";
    if (c.name.empty()) err(path + ".name", "must be nonempty");
    if (!comp_names.insert(c.name).second) err(path + ".name", "duplicate component \"" + c.name + "\"");
    if (c.degree < 1) err(path + ".degree", "must be >= 1");
    degree_sum += c.degree;
    if (c.normal_crossing && mode != AnalysisMode::Arrangement) {
      err(path + ".normal_crossing", "only meaningful in arrangement mode");
    }
  }
  if (spec.components.empty()) err("components", "at least one component is required");
  if (!spec.components.empty() && degree_sum != spec.d) {
    err("components", "component degrees sum to " + std::to_string(degree_sum) +
                          ", expected d = " + std::to_string(spec.d));
  }

  const LaurentPoly t_minus_one = LaurentPoly::from_terms({{1, 1}, {0, -1}});
  std::set<std::string> stratum_names;
  std::map<std::string, int> smooth_count;  // component -> # smooth strata
  int cone_points = 0;
  for (size_t i = 0; i < spec.strata.size(); ++i) {
    const auto& s = spec.strata[i];
    const std::string path = "strata[" + std::to_string(i) + "]";
    if (s.name.empty()) err(path + ".name", "must be nonempty");
    if (!stratum_names.insert(s.name).second) err(path + ".name", "duplicate stratum \"" + s.name + "\"");
    if (s.dim < 0 || s.dim > spec.n) {
      err(path + ".dim", "must lie in [0, n]");
      continue;
    }
    if (s.components.empty()) err(path + ".components", "must be nonempty");
    std::set<std::string> seen;
    for (const auto& m : s.components) {
      if (!comp_names.count(m)) err(path + ".components", "unknown component \"" + m + "\"");
      if (!seen.insert(m).second) err(path + ".components", "duplicate component \"" + m + "\"");
    }

    switch (s.link.type) {
      case LinkType::Smooth:
        if (s.dim != spec.n) {
          err(path + ".link", "smooth links only occur on top-dimensional strata");
        }
        if (s.components.size() != 1) {
          err(path + ".components",
              "a smooth top stratum lies in exactly one component");
        }
        for (const auto& m : s.components) smooth_count[m] += 1;
        break;
      case LinkType::Brieskorn: {
        if (s.dim == spec.n) {
          err(path + ".link", "top-dimensional strata must use the smooth link");
          break;
        }
        const int expected = spec.n - s.dim + 1;
        if (static_cast<int>(s.link.exponents.size()) != expected) {
          err(path + ".link.exponents",
              "stratum \"" + s.name + "\" of dimension " + std::to_string(s.dim) +
                  " needs " + std::to_string(expected) + " exponents, got " +
                  std::to_string(s.link.exponents.size()));
        }
        bool exps_ok = true;
        for (long long a : s.link.exponents) {
          if (a < 2) {
            err(path + ".link.exponents", "exponents must be >= 2");
            exps_ok = false;
            break;
          }
        }
        if (exps_ok && !exponent_lcm(s.link.exponents)) {
          err(path + ".link.exponents", "exponent lcm exceeds the supported range");
        }
        break;
      }
      case LinkType::Explicit: {
        if (s.dim == spec.n) {
          err(path + ".link", "top-dimensional strata must use the smooth link");
          break;
        }
        for (const auto& [l, p] : s.link.xi) {
          if (l > spec.n - s.dim) {
            err(path + ".link.xi",
                "degree " + std::to_string(l) + " exceeds n - dim = " +
                    std::to_string(spec.n - s.dim) +
                    " (local modules vanish there)");
          }
          if (p.is_zero()) {
            err(path + ".link.xi", "degree " + std::to_string(l) + ": the order of a torsion module is nonzero");
          }
        }
        auto it = s.link.xi.find(0);
        if (it != s.link.xi.end() && !it->second.is_zero() &&
            !unit_equivalent(it->second, t_minus_one)) {
          err(path + ".link.xi", "degree 0 entry must be t - 1 up to units (connected link complement)");
        }
        break;
      }
      case LinkType::ConePoint:
        ++cone_points;
        if (mode != AnalysisMode::Arrangement) {
          err(path + ".link", "cone_point strata only occur in arrangement mode");
        }
        if (s.dim != 0) err(path + ".dim", "the cone point has dimension 0");
        break;
    }
  }
  if (cone_points > 1) err("strata", "at most one cone_point stratum");

  for (const auto& name : comp_names) {
    const int count = smooth_count.count(name) ? smooth_count.at(name) : 0;
    if (count != 1) {
      err("strata", "component \"" + name + "\" needs exactly one smooth top stratum, found " +
                        std::to_string(count));
    }
  }

  if (spec.flags.isolated_singularities) {
    for (size_t i = 0; i < spec.strata.size(); ++i) {
      const auto& s = spec.strata[i];
      if (s.link.type == LinkType::Smooth || s.link.type == LinkType::ConePoint) continue;
      const int expected_dim = mode == AnalysisMode::Arrangement ? 1 : 0;
      if (s.dim != expected_dim) {
        err("strata[" + std::to_string(i) + "].dim",
            std::string("isolated singularities require singular strata of dimension ") +
                std::to_string(expected_dim) +
                (mode == AnalysisMode::Arrangement ? " (cones over points)" : ""));
      }
    }
    if (mode == AnalysisMode::Hypersurface && spec.n >= 2 &&
        !spec.flags.no_codim_one_sing) {
      err("flags.no_codim_one_sing",
          "isolated singularities with n >= 2 imply no codimension-one singularities");
    }
  }

  if (spec.chi_milnor_fiber && mode != AnalysisMode::Arrangement) {
    err("chi_milnor_fiber", "only used in arrangement mode");
  }

  return errors;
}

std::optional<LocalXiTable> xi_table_for(const HypersurfaceSpec& spec,
                                         const StratumSpec& stratum) {
  switch (stratum.link.type) {
    case LinkType::Smooth:
      return xi_smooth(spec.n);
    case LinkType::Brieskorn:
      return xi_from_brieskorn(spec.n, stratum.dim,
                               BrieskornData{stratum.link.exponents});
    case LinkType::Explicit: {
      LocalXiTable table;
      table.s = stratum.dim;
      table.entries = stratum.link.xi;
      return table;
    }
    case LinkType::ConePoint:
      return std::nullopt;
  }
  return std::nullopt;
}

const ComponentSpec* find_component(const HypersurfaceSpec& spec,
                                    const std::string& name) {
  for (const auto& c : spec.components) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace alexobs
