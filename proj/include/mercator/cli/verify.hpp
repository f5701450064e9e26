#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mercator::cli {

struct VerifySettings {
  int order = 13;
  int grid = 100;
  int workers = 1;
  std::uint64_t seed = 20080508;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  VerifySettings settings;
  std::vector<CheckOutcome> checks;

  bool all_passed() const;
  void print(std::ostream& out) const;
};

/// Runs every library invariant (exact series identities, numeric
/// identities, route equivalence) and collects one outcome per check.
VerifyReport run_verify(const VerifySettings& settings);

}  // namespace mercator::cli
