#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "saff/rationality.hpp"
#include "saff/repclass.hpp"
#include "saff/weight.hpp"

namespace saff::catalog {

/// All canonical weights of rank n with weyl_dim ≤ max_dim, sorted by
/// (dimension, parts).
std::vector<Weight> irreps_up_to_dim(int n, const BigInt& max_dim);

enum class Trigger { QBad, DimSSmall };
std::string to_string(Trigger t);

struct CatalogEntry {
  int n = 0;
  SemisimpleRep S;
  SemisimpleRep Q;
  Trigger trigger = Trigger::QBad;
  /// Decision for the instance with W = 0.
  rationality::Verdict verdict;
};

struct CatalogConfig {
  /// Trivial summands allowed in Q; defaults to n²-2 and may not exceed it.
  std::optional<std::int64_t> max_trivials;
  /// Bound on dim S. Defaults to n²+2n-1 for the small-S route and to no
  /// bound for the bad-Q route; when set it applies to both.
  std::optional<std::int64_t> max_dim_s;
  /// Safety cap on nontrivial summands in a bad multiset.
  int max_bad_summands = 0;  // 0 means n²
  repclass::StabilizerOptions stabilizer;
};

struct CatalogSummary {
  std::size_t total = 0;
  std::map<std::string, std::size_t> by_trigger;
  std::map<std::string, std::size_t> by_outcome;
  /// The bad-multiset search hit max_bad_summands somewhere.
  bool truncated = false;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  CatalogSummary summary;
};

/// Multisets of nontrivial summands from bad_list(n) that are bad as a whole
/// (including the empty one), in canonical order.
std::vector<WeightMultiset> bad_multisets(int n, const CatalogConfig& config, bool* truncated = nullptr);

/// Candidates (Q, S) for exceptional two-step extensions. Throws
/// ResourceLimitError when a cap exceeds its clause threshold.
Catalog enumerate_exceptional_candidates(int n, const CatalogConfig& config = {});

/// Plain-text summary table.
std::string render_summary(const CatalogSummary& s);

}  // namespace saff::catalog
