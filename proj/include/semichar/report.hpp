#pragma once

#include <json.hpp>

#include <string>

#include "semichar/realization.hpp"

namespace semichar {

/// Machine-readable report. order_G is a decimal string.
nlohmann::ordered_json to_json(const RealizationReport& r);
/// Human-readable report; includes the serialized biset.
std::string to_text(const RealizationReport& r);

}  // namespace semichar
