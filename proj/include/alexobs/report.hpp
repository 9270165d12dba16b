#pragma once

#include <string>

#include <json.hpp>

#include "alexobs/engine.hpp"

namespace alexobs {

// Human-readable report with citations inline; ends with a one-line summary
// of the per-degree conclusions.
std::string render_text(const ObstructionReport& report);

// Machine-readable document mirroring ObstructionReport field-for-field;
// byte-stable for identical inputs.
nlohmann::ordered_json render_json(const ObstructionReport& report);

}  // namespace alexobs
