#pragma once

#include <optional>
#include <string>
#include <vector>

#include "saff/repclass.hpp"
#include "saff/weight.hpp"

namespace saff::rationality {

/// V = V_1 ⊕ W with 0 → S → V_1 → Q → 0; only the semisimple data is given.
struct TwoStepExtension {
  int n = 0;
  SemisimpleRep S;
  SemisimpleRep Q;
  SemisimpleRep W;
  /// Caller's assertion that V is generically free for SAff_n.
  std::optional<bool> assume_generically_free;
};

/// S ⊂ Q ⊗ C^n and Q ⊂ S ⊗ (C^n)^∨ with multiplicities.
bool check_structural(const TwoStepExtension& ext);

struct Freeness {
  bool free = false;
  /// Name of the failed condition ("R1", "R2", "R3", "(a)") or empty.
  std::string reason;
  std::string detail;
};

/// Sufficient condition for generic freeness: Q is good and is not one of
/// R1 = C^n, R2 = Λ²(C^n)^∨, R3 = a·C ⊕ b·(C^n)^∨ with 1 ≤ a + b ≤ n - 1.
/// The assertion flag, when true, overrides to free.
Freeness check_generic_freeness(const TwoStepExtension& ext,
                                const repclass::StabilizerOptions& opts = {});

/// Which of R1/R2/R3 Q equals, if any.
std::optional<std::string> r_list_match(const WeightMultiset& q);

enum class Outcome { RationalByA, RationalByB, Exceptional, PossiblyNotGenericallyFree };
std::string to_string(Outcome o);

struct Evidence {
  std::string condition;
  std::string clause;
  bool result = false;
  std::string detail;
};

struct Witness {
  WeightMultiset W1;
  WeightMultiset W2;
};

struct Verdict {
  Outcome outcome = Outcome::Exceptional;
  std::optional<Witness> witness;
  std::vector<Evidence> evidence;
  /// Some goodness decision relied on the stabilizer heuristic.
  bool heuristic = false;
  /// The (A)-search fell back to greedy augmentation.
  bool incomplete = false;
};

/// Sub-multiset count above which the (A)-search goes greedy.
inline constexpr std::uint64_t kMaxExhaustiveSplits = std::uint64_t{1} << 20;

/// Decides (B) (≥ n²-1 trivial summands in Q), then searches W = W1 ⊕ W2 for
/// (A) (Q ⊕ W2 good, dim S + dim W1 ≥ n² + 2n), W2 by increasing dimension
/// then lexicographically. Throws ValidationError if check_structural fails.
Verdict decide_rationality(const TwoStepExtension& ext, const repclass::StabilizerOptions& opts = {});

struct StableLevel {
  int sl = 0;    // n² - 1
  int saff = 0;  // n² - 1 + n
};
StableLevel stable_level(int n);

}  // namespace saff::rationality
