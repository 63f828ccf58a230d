#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3mcg/polytope.hpp"

namespace k3mcg {

struct VerifyProfile {
  std::vector<long> levels{1, 2};
  long height = 10;
  long bmax = 10;
  long cmax = 10;
  /// "quartic" (the n = 2 mirror) and/or "sextic" (the n = 1 mirror).
  std::vector<std::string> examples{"quartic", "sextic"};
  std::uint64_t seed = 20240601;
};

/// Profile restricted to one level and its mirror example.
VerifyProfile profile_for_level(long n);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double elapsed_ms = 0;
  double limit_ms = 0;
};

/// The quartic simplex Conv(e1, e2, e3, -e1-e2-e3) and the sextic one with
/// last vertex (-1, -1, -3).
LatticePolytope quartic_simplex();
LatticePolytope sextic_simplex();

/// Runs one criterion (1..12); pass already accounts for the time limit.
CriterionResult run_criterion(int id, const VerifyProfile& profile);
std::vector<CriterionResult> verify_all(const VerifyProfile& profile = {});

}  // namespace k3mcg
