#pragma once

#include <string>
#include <vector>

#include "maxint/report.hpp"

namespace maxint {

/// Relation checks (facile, frate, sandwich, fit2, weakminmax, quofra) count
/// violations; quat only lists groups with m > menta.
inline const std::vector<std::string> kScanChecks = {"facile", "frate",  "sandwich", "fit2",
                                                     "weakminmax", "quofra", "quat"};

struct ScanOptions {
  std::size_t max_order = 200;
  std::vector<std::string> checks = kScanChecks;
  std::size_t threads = 1;
  double budget_seconds = 300;  // per entry and field
};

struct ScanRow {
  CatalogEntry entry;
  InvariantReport report;
  std::vector<std::string> violations;
  std::vector<std::string> observations;  // quat candidates
  std::string error;                      // cap / timeout outside a single field
  double seconds = 0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::size_t violation_count() const;
};

/// Checks one group; exposed for tests.
ScanRow scan_entry(const CatalogEntry& entry, const ScanOptions& options);
ScanResult scan(const ScanOptions& options);

std::string format_scan(const ScanResult& result);
Json scan_json(const ScanResult& result);

}  // namespace maxint
