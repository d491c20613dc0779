#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "saff/matmodel.hpp"

// The acceptance suite: one check per criterion, each printing a single
// PASS/FAIL line. Shared by the `selftest` subcommand and the test binary.
namespace saff::acceptance {

struct Options {
  std::uint64_t seed = 20240611;
  /// Criteria to run (1..10); empty means all.
  std::set<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Models used for the filtration sweeps: Sym^l(C^{n+1})^∨ and its dual,
/// their products with (C^n)^∨ and C^n, and the mixed reference submodule,
/// for 2 ≤ n ≤ 3, l ≤ 4.
std::vector<std::pair<std::string, matmodel::AffMatrixRep>> filtration_sweep_models();

std::vector<CriterionResult> run(const Options& opts, std::ostream* progress = nullptr);

/// "PASS  3  reference example reproduction  (detail)" style line.
std::string format_line(const CriterionResult& r);

}  // namespace saff::acceptance
