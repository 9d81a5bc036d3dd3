#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hardymin {

struct VerifyCheck {
  std::string label;
  double computed = 0;
  double expected = 0;
};

struct VerifyItem {
  std::string name;
  double tolerance = 0;
  std::vector<VerifyCheck> checks;

  double discrepancy() const;
  bool passed() const;
};

struct VerifyOptions {
  /// Shift every expected constant of this item by `perturbation`.
  std::optional<std::string> perturb;
  double perturbation = 1e-3;
};

struct VerifySummary {
  std::vector<VerifyItem> items;

  std::size_t failures() const;
  /// False when nothing ran.
  bool passed() const;
};

/// Names of the catalog items, in run order.
std::vector<std::string> verify_item_names();

/// Runs the catalog of published closed-form values and example computations.
VerifySummary run_verify(const VerifyOptions& opts = {});

}  // namespace hardymin
