// The pinned end-to-end checks behind the `reproduce-paper` command and the
// acceptance test binary: every published value this project reproduces,
// phrased as one pass/fail item each.
#pragma once

#include <string>
#include <vector>

namespace toric {

struct AcceptanceResult {
  int id;             // 1-based criterion number
  std::string name;   // one line, stable
  bool pass;
  std::string detail; // short data summary or the first mismatch
};

/// Runs all criteria in order.  `corrupt_golden` flips one pinned value to
/// exercise the failure path deterministically (used by tests and the
/// harness's self-check mode).
std::vector<AcceptanceResult> run_acceptance_suite(bool corrupt_golden = false);

}  // namespace toric
