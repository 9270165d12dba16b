// Command-line front end: parse a stratification file, run the obstruction
// pipeline, emit a report, or check claimed Alexander polynomials against
// every applicable filter and bound.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexobs/engine.hpp"
#include "alexobs/poly_io.hpp"
#include "alexobs/report.hpp"
#include "alexobs/strata.hpp"

namespace {

struct Claim {
  int degree = 0;
  alexobs::LaurentPoly poly;
  std::string source;
};

Claim parse_claim(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("claim must look like <i>:<polynomial json>, got \"" +
                                text + "\"");
  }
  Claim claim;
  claim.source = text;
  try {
    size_t pos = 0;
    claim.degree = std::stoi(text.substr(0, colon), &pos);
    if (pos != colon) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("claim degree \"" + text.substr(0, colon) +
                                "\" is not an integer");
  }
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(text.substr(colon + 1));
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("claim polynomial is not valid JSON: ") +
                                err.what());
  }
  claim.poly = alexobs::poly_from_json(body, "claim");
  if (claim.poly.is_zero()) {
    throw std::invalid_argument("claimed polynomials must be nonzero");
  }
  return claim;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"obstruction calculus for global Alexander polynomials of "
               "singular hypersurface complements"};

  std::string input_path;
  std::string mode = "hypersurface";
  std::string format = "text";
  std::vector<std::string> claim_args;

  app.add_option("input", input_path, "stratification file (JSON)")
      ->required();
  app.add_option("--mode", mode, "hypersurface | arrangement | verify")
      ->check(CLI::IsMember({"hypersurface", "arrangement", "verify"}));
  app.add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--claim", claim_args,
                 "claimed polynomial <i>:<poly json>; verify mode only, repeatable");

  CLI11_PARSE(app, argc, argv);

  if (mode == "verify" && claim_args.empty()) {
    std::cerr << "verify mode requires at least one --claim\n";
    return 1;
  }
  if (mode != "verify" && !claim_args.empty()) {
    std::cerr << "--claim requires --mode verify\n";
    return 1;
  }

  try {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "cannot open input file: " << input_path << "\n";
      return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const alexobs::HypersurfaceSpec spec = alexobs::parse_spec(buffer.str());
    const alexobs::AnalysisMode analysis_mode =
        mode == "arrangement" ? alexobs::AnalysisMode::Arrangement
                              : alexobs::AnalysisMode::Hypersurface;
    const auto errors = alexobs::validate_spec(spec, analysis_mode);
    if (!errors.empty()) {
      for (const auto& e : errors) std::cerr << "invalid spec: " << e << "\n";
      return 1;
    }

    if (mode == "verify") {
      std::vector<Claim> claims;
      for (const auto& arg : claim_args) claims.push_back(parse_claim(arg));
      const alexobs::ObstructionReport report = alexobs::analyze(spec);
      bool all_ok = true;
      for (const auto& claim : claims) {
        const alexobs::ClaimCheck check =
            alexobs::verify_claim(spec, report, claim.degree, claim.poly);
        if (check.accepted) {
          std::cout << "claim delta_" << claim.degree << " = "
                    << claim.poly.str() << ": ACCEPTED\n";
        } else {
          all_ok = false;
          std::cout << "claim delta_" << claim.degree << " = "
                    << claim.poly.str() << ": REJECTED by " << check.rule_id
                    << " (" << check.citation << "): " << check.message << "\n";
        }
      }
      return all_ok ? 0 : 2;
    }

    const alexobs::ObstructionReport report =
        mode == "arrangement" ? alexobs::arrangement_analyze(spec)
                              : alexobs::analyze(spec);
    if (format == "structured") {
      std::cout << alexobs::render_json(report).dump(2) << "\n";
    } else {
      std::cout << alexobs::render_text(report);
    }
    return 0;
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return 1;
  }
}
