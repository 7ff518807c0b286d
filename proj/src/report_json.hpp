#pragma once

#include <string>

#include <json.hpp>

#include "anc/harness.hpp"

namespace anc::detail {

// Spec echo + measured metrics for one run; shared by write_summary and the
// table writers.
nlohmann::json record_json(const RunRecord& rec);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace anc::detail
