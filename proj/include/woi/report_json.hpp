#pragma once

#include <string>

#include "woi/orchestrator.hpp"

namespace woi {

// Stable text form of a run report. Serialization is deterministic: key
// order is fixed and doubles round-trip exactly, so identical runs dump
// byte-identical documents.
std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

} // namespace woi
