#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alexobs/links.hpp"

namespace alexobs {

enum class LinkType { Smooth, Brieskorn, Explicit, ConePoint };

struct LinkData {
  LinkType type = LinkType::Smooth;
  std::vector<long long> exponents;      // Brieskorn
  std::map<int, LaurentPoly> xi;         // Explicit
};

// One stratum of a Whitney stratification of (CP^{n+1}, V): its complex
// dimension, which irreducible components contain its closure, and the local
// link data used to read off the xi^s_l table.
struct StratumSpec {
  std::string name;
  int dim = 0;
  std::vector<std::string> components;
  LinkData link;
};

struct ComponentSpec {
  std::string name;
  long long degree = 0;
  bool normal_crossing = false;  // arrangement mode only
};

struct SpecFlags {
  bool rational_homology_manifold = false;
  bool no_codim_one_sing = false;
  bool isolated_singularities = false;
};

// The combinatorial input: V in CP^{n+1} of degree d with its component
// structure, stratification, flags and optional Euler characteristics. In
// arrangement mode the same record describes the projective cone V over an
// arrangement Y in CP^n, with the vertex as a "cone_point" stratum.
struct HypersurfaceSpec {
  int n = 0;
  long long d = 0;
  std::vector<ComponentSpec> components;
  std::vector<StratumSpec> strata;
  SpecFlags flags;
  std::optional<long long> chi_complement;
  std::optional<long long> chi_milnor_fiber;
  // Cyclotomic orders mentioned by "cyclo" encodings in the input; used to
  // seed factorization probes.
  std::set<long long> cyclo_hints;
};

enum class AnalysisMode { Hypersurface, Arrangement };

// Parses the canonical JSON input document. Unknown fields are rejected;
// syntax errors carry line/column. Semantic checks live in validate().
HypersurfaceSpec parse_spec(const std::string& text);

// Canonical serialization; parse_spec(serialize_spec(s)) == s on valid specs.
std::string serialize_spec(const HypersurfaceSpec& spec);

// Collects every violated invariant (field path + message); empty means the
// spec is valid for the given mode.
std::vector<std::string> validate_spec(const HypersurfaceSpec& spec,
                                       AnalysisMode mode);

// The xi table of a stratum (cone points have none).
std::optional<LocalXiTable> xi_table_for(const HypersurfaceSpec& spec,
                                         const StratumSpec& stratum);

const ComponentSpec* find_component(const HypersurfaceSpec& spec,
                                    const std::string& name);

}  // namespace alexobs
