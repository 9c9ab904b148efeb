#pragma once

#include <string>

#include "json.hpp"

#include "sing/invariants.hpp"

namespace sing {

inline constexpr int kSchemaVersion = 1;

/// Structured report; field order is fixed so output is byte-deterministic
/// for a given input and schema version.
nlohmann::ordered_json report_to_json(const SingularityReport& rep, const CheckSet& checks);

std::string report_to_text(const SingularityReport& rep, const CheckSet& checks);

std::string checks_to_string(const CheckSet& checks);

}  // namespace sing
