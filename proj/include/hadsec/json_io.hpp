#pragma once

#include <json.hpp>

#include "hadsec/degeneration.hpp"
#include "hadsec/hadamard.hpp"
#include "hadsec/secant.hpp"
#include "hadsec/tables.hpp"
#include "hadsec/tropical.hpp"

namespace hadsec {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kJsonSchema = 1;

// Key order is fixed by ordered_json, so equal inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const SecantDimensionReport& rep);
Json to_json(const HadamardDimensionReport& rep);
Json to_json(const GenericHrankReport& rep);
Json to_json(const Table& table);
Json to_json(const DegenerationReport& rep);

}  // namespace hadsec
