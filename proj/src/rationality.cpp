#include "saff/rationality.hpp"

#include <algorithm>
#include <functional>

#include "saff/errors.hpp"
#include "saff/schur.hpp"

namespace saff::rationality {

using repclass::Classification;

namespace {

WeightMultiset standard(int n) { return WeightMultiset(n, {{Weight::sym(n, 1), 1}}); }
WeightMultiset standard_dual(int n) {
  return WeightMultiset(n, {{schur::dual(Weight::sym(n, 1)), 1}});
}

}  // namespace

bool check_structural(const TwoStepExtension& ext) {
  const int n = ext.n;
  if (ext.S.rank() != n || ext.Q.rank() != n || ext.W.rank() != n) return false;
  if (ext.S.summands().empty() || ext.Q.summands().empty()) return false;
  const auto q_up = schur::tensor(ext.Q.summands(), standard(n));
  const auto s_down = schur::tensor(ext.S.summands(), standard_dual(n));
  return ext.S.summands().is_subset_of(q_up) && ext.Q.summands().is_subset_of(s_down);
}

std::optional<std::string> r_list_match(const WeightMultiset& q) {
  const int n = q.rank();
  const Weight std_w = Weight::sym(n, 1);
  const Weight dual_std = schur::dual(std_w);
  const Weight wedge2_dual = schur::dual(Weight::wedge(n, 2));
  if (q == WeightMultiset(n, {{std_w, 1}})) return "R1";
  if (q == WeightMultiset(n, {{wedge2_dual, 1}})) return "R2";
  const Weight triv = Weight::trivial(n);
  const std::int64_t total = q.count();
  if (total >= 1 && total <= n - 1 &&
      q.multiplicity(triv) + q.multiplicity(dual_std) == total) {
    return "R3";
  }
  return std::nullopt;
}

Freeness check_generic_freeness(const TwoStepExtension& ext,
                                const repclass::StabilizerOptions& opts) {
  Freeness f;
  if (auto r = r_list_match(ext.Q.summands())) {
    f.reason = *r;
    f.detail = "Q = " + ext.Q.summands().to_string() + " is " + *r;
    if (*r == "R3") {
      f.detail += " (" + std::to_string(ext.Q.summands().count()) + " ≤ n-1 = " +
                  std::to_string(ext.n - 1) + " summands)";
    }
  } else {
    const auto c = repclass::classify(ext.Q, opts);
    if (!repclass::is_good(c.verdict)) {
      f.reason = "(a)";
      f.detail = "Q = " + ext.Q.summands().to_string() + " is bad";
    } else {
      f.free = true;
      f.detail = "Q is " + repclass::to_string(c.verdict) + " and not on the R-list";
    }
  }
  if (!f.free && ext.assume_generically_free.value_or(false)) {
    f.free = true;
    f.detail += "; overridden by assume_generically_free";
  }
  return f;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::RationalByA: return "RationalByA";
    case Outcome::RationalByB: return "RationalByB";
    case Outcome::Exceptional: return "Exceptional";
    case Outcome::PossiblyNotGenericallyFree: return "PossiblyNotGenericallyFree";
  }
  return "?";
}

namespace {

struct Split {
  WeightMultiset w2;
  BigInt dim;
};

std::vector<Split> all_splits(const WeightMultiset& w) {
  std::vector<std::pair<Weight, std::int64_t>> entries(w.entries().begin(), w.entries().end());
  std::vector<Split> out;
  WeightMultiset cur(w.rank());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == entries.size()) {
      out.push_back({cur, cur.dimension()});
      return;
    }
    for (std::int64_t c = 0; c <= entries[i].second; ++c) {
      if (c > 0) cur.add(entries[i].first, 1);
      go(i + 1);
    }
    if (entries[i].second > 0) cur.remove(entries[i].first, entries[i].second);
  };
  go(0);
  std::sort(out.begin(), out.end(), [](const Split& a, const Split& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.w2 < b.w2;
  });
  return out;
}

std::uint64_t split_count(const WeightMultiset& w) {
  std::uint64_t total = 1;
  for (const auto& [x, m] : w.entries()) {
    const auto f = static_cast<std::uint64_t>(m) + 1;
    if (total > kMaxExhaustiveSplits / f + 1) return kMaxExhaustiveSplits + 1;
    total *= f;
  }
  return total;
}

WeightMultiset difference(WeightMultiset a, const WeightMultiset& b) {
  for (const auto& [w, m] : b.entries()) a.remove(w, m);
  return a;
}

}  // namespace

Verdict decide_rationality(const TwoStepExtension& ext, const repclass::StabilizerOptions& opts) {
  const int n = ext.n;
  Verdict v;
  if (!check_structural(ext)) {
    throw ValidationError("structural containments S ⊂ Q⊗C^n, Q ⊂ S⊗(C^n)^∨ do not hold");
  }
  v.evidence.push_back({"structural", "S ⊂ Q⊗C^n and Q ⊂ S⊗(C^n)^∨", true, ""});
  v.evidence.push_back({"indecomposable", "V_1 does not split off an SL_n summand", true,
                        "caller-supplied assumption"});

  const auto freeness = check_generic_freeness(ext, opts);
  v.evidence.push_back({"generic freeness", "freeness criteria (a) and (b)", freeness.free,
                        freeness.reason.empty() ? freeness.detail
                                                : freeness.reason + ": " + freeness.detail});
  if (!freeness.free) {
    v.outcome = Outcome::PossiblyNotGenericallyFree;
    return v;
  }

  const std::int64_t trivials = ext.Q.trivial_count();
  const std::int64_t b_threshold = static_cast<std::int64_t>(n) * n - 1;
  const bool by_b = trivials >= b_threshold;
  v.evidence.push_back({"B", "Q contains ≥ n²-1 copies of C", by_b,
                        "trivial summands " + std::to_string(trivials) + ", threshold " +
                            std::to_string(b_threshold)});
  if (by_b) {
    v.outcome = Outcome::RationalByB;
    return v;
  }

  const BigInt a_threshold = n * n + 2 * n;
  const BigInt s_plus_w = ext.S.dimension() + ext.W.dimension();
  const auto& w = ext.W.summands();

  auto try_split = [&](const WeightMultiset& w2, const BigInt& w2_dim) -> bool {
    const BigInt lhs = s_plus_w - w2_dim;
    const SemisimpleRep qw2(ext.Q.summands() + w2);
    const auto c = repclass::classify(qw2, opts);
    const bool good = repclass::is_good(c.verdict);
    if (c.verdict == Classification::GoodHeuristic) v.heuristic = true;
    const bool ok = good && lhs >= a_threshold;
    v.evidence.push_back({"A", "Q ⊕ W2 good and dim(S ⊕ W1) ≥ n²+2n", ok,
                          "W2 = " + w2.to_string() + "; Q ⊕ W2 " + repclass::to_string(c.verdict) +
                              "; dim(S ⊕ W1) = " + lhs.get_str() + " vs " + a_threshold.get_str()});
    if (ok) {
      v.outcome = Outcome::RationalByA;
      v.witness = Witness{difference(w, w2), w2};
    }
    return ok;
  };

  if (split_count(w) <= kMaxExhaustiveSplits) {
    const auto splits = all_splits(w);
    std::size_t k = 0;
    for (; k < splits.size(); ++k) {
      if (s_plus_w - splits[k].dim < a_threshold) break;
      if (try_split(splits[k].w2, splits[k].dim)) return v;
    }
    if (k < splits.size()) {
      // Sorted by dimension: every remaining split fails the bound.
      v.evidence.push_back({"A", "Q ⊕ W2 good and dim(S ⊕ W1) ≥ n²+2n", false,
                            std::to_string(splits.size() - k) +
                                " splits with dim(W2) ≥ " + splits[k].dim.get_str() +
                                " give dim(S ⊕ W1) < " + a_threshold.get_str()});
    }
  } else {
    v.incomplete = true;
    std::vector<Weight> order;
    for (const auto& [x, m] : w.entries()) {
      for (std::int64_t i = 0; i < m; ++i) order.push_back(x);
    }
    std::stable_sort(order.begin(), order.end(), [](const Weight& a, const Weight& b) {
      return schur::weyl_dim(a) < schur::weyl_dim(b);
    });
    WeightMultiset w2(n);
    std::size_t next = 0;
    while (true) {
      const BigInt d = w2.dimension();
      if (s_plus_w - d < a_threshold) break;
      if (try_split(w2, d)) return v;
      if (next == order.size()) break;
      w2.add(order[next++]);
    }
    v.evidence.push_back({"A", "Q ⊕ W2 good and dim(S ⊕ W1) ≥ n²+2n", false,
                          "incomplete: greedy augmentation over " + std::to_string(w.count()) +
                              " summands found no split"});
  }

  v.outcome = Outcome::Exceptional;
  v.evidence.push_back({"exceptional (1)", "every split has Q ⊕ W2 bad or dim(S ⊕ W1) < n²+2n",
                        true, v.incomplete ? "incomplete search" : "exhaustive search"});
  v.evidence.push_back({"exceptional (2)", "Q contains < n²-1 copies of C", true,
                        std::to_string(trivials) + " < " + std::to_string(b_threshold)});
  return v;
}

StableLevel stable_level(int n) {
  if (n < 2) throw std::invalid_argument("stable_level: need n ≥ 2");
  return {n * n - 1, n * n - 1 + n};
}

}  // namespace saff::rationality
