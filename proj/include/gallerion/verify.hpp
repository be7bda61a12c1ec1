#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gallerion/gallery.hpp"

namespace gallerion {
namespace verify {

struct Options {
  std::vector<std::string> grid_types = {"A1", "A2", "C2", "G2"};
  int max_coordinate = 2;
  /// Restrict the grid to one type and/or one weight.
  std::string type_filter;
  std::optional<IntVec> lambda_filter;
  /// Run only the named check ("" = all).
  std::string only;
  /// Instance caps for exhaustive sweeps (total gallery count).
  uint64_t enumeration_cap = 1000000;
  uint64_t operator_cap = 30000;
  /// Test hook: the dimension statistic under scrutiny.
  std::function<int(const Gallery&)> dimension_fn;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;       // e.g. "8 = 8", or the counterexample
  int instances_checked = 0;
  int instances_skipped = 0;  // skipped for exceeding the enumeration cap
};

struct Report {
  std::vector<CheckResult> results;
  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
};

/// Names understood by Options::only, in reporting order.
const std::vector<std::string>& check_names();

Report run(const Options& options);

}  // namespace verify
}  // namespace gallerion
