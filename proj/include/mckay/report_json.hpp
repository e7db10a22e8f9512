#pragma once

#include <json.hpp>

#include "mckay/checker.hpp"

namespace mckay {

using Json = nlohmann::ordered_json;

/// CheckReport as JSON with a fixed key order. Integers are decimal strings.
/// Timings are omitted when `with_timing` is false, which makes the output a
/// pure function of (spec, prime, cap).
Json to_json(const CheckReport& r, bool with_timing = true);

Json to_json(const SymmetricTable& t, bool with_timing = true);

}  // namespace mckay
