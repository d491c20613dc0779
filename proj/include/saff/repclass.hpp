#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "saff/irrep_model.hpp"
#include "saff/weight.hpp"

namespace saff::repclass {

/// The irreducible bad representations Λ², Sym², C^n, C, Ad_0 = Σ^{(2,1,…,1,0)}
/// and their duals, canonicalized. The list is complete for n > 9; for
/// smaller n it is used as a first filter only.
std::set<Weight> bad_list(int n);
bool list_is_authoritative(int n);

struct StabilizerOptions {
  std::uint64_t seed = 20240611;
  int trials = 3;
  /// Random coordinates are drawn from [-bound, bound].
  int bound = 100;
  std::size_t max_model_dim = kDefaultAmbientCap;
};

/// Minimum over trials of dim {X ∈ sl_n : X·v = 0} for random integer points
/// v. Zero certifies a finite generic stabilizer.
struct StabilizerReport {
  SemisimpleRep rep;
  int stab_dim = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

StabilizerReport stabilizer_dimension(const SemisimpleRep& rep, const StabilizerOptions& opts = {});

enum class Classification { Good, Bad, GoodHeuristic };
std::string to_string(Classification c);

struct ClassifyResult {
  Classification verdict = Classification::Good;
  /// Present when every summand was on the bad list and the stabilizer
  /// engine decided.
  std::optional<StabilizerReport> stabilizer;
  /// A summand outside bad_list(n), when one exists.
  std::optional<Weight> off_list_witness;
  bool list_authoritative = false;
};

/// Good if some summand is off the bad list; otherwise Bad when the generic
/// stabilizer has positive dimension and GoodHeuristic when it is finite
/// (a finite non-central stabilizer would go unnoticed). Memoized.
ClassifyResult classify(const SemisimpleRep& rep, const StabilizerOptions& opts = {});
bool is_good(Classification c);

/// Smallest t ≤ max_t with t copies of r classified as good, if any.
std::optional<int> minimal_good_power(const Weight& r, int max_t, const StabilizerOptions& opts = {});

}  // namespace saff::repclass
