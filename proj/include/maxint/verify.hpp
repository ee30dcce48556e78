#pragma once

#include <string>
#include <vector>

#include "maxint/scan.hpp"

namespace maxint {

/// Reference values for the reproduction suite. Tests may alter a field to
/// confirm that the corresponding check fails.
struct Expectations {
  std::size_t alt5_menta = 3;
  std::size_t alt5_manta = 3;
  std::size_t alt5_alpha = 2;
  std::size_t sym4_common = 3;  // mindim = maxdim = menta = manta
  std::size_t nilpotent_min_entries = 10;
  std::vector<std::size_t> agl25_classes = {25, 1, 5, 6, 10};
  std::size_t agl25_maxdim_at_least = 5;
  std::size_t agl25_trivializing = 4;
  std::size_t sec2_dim = 4;    // a + b
  std::size_t sec2_chain = 6;  // 2a + b = a + 2b at a = b = 2
  std::size_t sec3_maxdim_at_least = 3;
  std::size_t sec3_menta_at_most = 4;
  std::size_t sym5_maxdim = 4;
  std::size_t sym5_menta_at_most = 4;
  std::size_t scan_min_entries = 25;
  std::size_t sigma_at_least = 3;
  std::size_t tau_at_most = 4;
  std::size_t alt5_tau = 2;
  std::size_t sym3cubed_m = 6;
};

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;  // on failure: "expected ..., got ..."
  double seconds = 0;
  double budget_seconds = 0;
};

struct VerifyOptions {
  bool full = false;
  std::size_t threads = 1;
  Expectations expect;
};

/// Checks with a budget above 60 s run only with `full`.
std::vector<CheckResult> verify_paper(const VerifyOptions& options);
std::string format_checks(const std::vector<CheckResult>& checks);

}  // namespace maxint
