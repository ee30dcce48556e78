#pragma once

#include <string>

#include "json.hpp"
#include "maxint/catalog.hpp"
#include "maxint/dimensions.hpp"

namespace maxint {

using Json = nlohmann::ordered_json;

struct RunSettings {
  double budget_seconds = 300;
  std::size_t threads = 1;
  std::vector<std::string> skip;
};

/// Stable report document: keys always appear in the same order and every
/// invariant carries either a value with a witness or a "skipped" marker.
/// Only the trailing "timing" object varies between runs.
Json make_report(const Built& built, const Incidence& inc, const InvariantReport& r, const RunSettings& settings,
                 double seconds);

/// Aligned fixed-width text rendering of a report document.
std::string format_report(const Json& report);

Json field_json(const Field& f);

}  // namespace maxint
