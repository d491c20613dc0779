#include "saff/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "saff/errors.hpp"
#include "saff/schur.hpp"

namespace saff::catalog {

std::vector<Weight> irreps_up_to_dim(int n, const BigInt& max_dim) {
  if (n < 1) throw std::invalid_argument("irreps_up_to_dim: need n ≥ 1");
  std::vector<Weight> out;
  if (max_dim < 1) return out;
  // weyl_dim is nondecreasing in each gap a_k = λk - λ(k+1) (every factor
  // λi - λj + j - i is a sum of gaps plus a constant), but not in each part:
  // (3,3,0,0) has dimension 50 while (3,3,3,0) has 20. Enumerate gaps and
  // stop a direction as soon as the dimension overshoots.
  std::vector<int> gaps(std::max(n - 1, 0), 0);
  auto parts_of = [&] {
    std::vector<int> p(n, 0);
    for (int k = n - 2; k >= 0; --k) p[k] = p[k + 1] + gaps[k];
    return p;
  };
  std::function<void(int)> go = [&](int k) {
    if (k == n - 1) {
      out.emplace_back(n, parts_of());
      return;
    }
    for (gaps[k] = 0;; ++gaps[k]) {
      // Later gaps at zero give the smallest dimension in this branch.
      if (schur::weyl_dim(n, parts_of()) > max_dim) break;
      go(k + 1);
    }
    gaps[k] = 0;
  };
  go(0);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    const auto da = schur::weyl_dim(a), db = schur::weyl_dim(b);
    if (da != db) return da < db;
    return a.parts() < b.parts();
  });
  return out;
}

std::string to_string(Trigger t) { return t == Trigger::QBad ? "Q-bad" : "dim-S-small"; }

namespace {

WeightMultiset standard(int n) { return WeightMultiset(n, {{Weight::sym(n, 1), 1}}); }
WeightMultiset standard_dual(int n) {
  return WeightMultiset(n, {{schur::dual(Weight::sym(n, 1)), 1}});
}

// Sub-multisets X of `pool` with base ⊂ X ⊗ factor, optionally bounded in
// dimension and trivial count. Per-irrep tensors are memoized by the caller.
class Partner {
 public:
  Partner(int n, const WeightMultiset& factor) : n_(n), factor_(factor) {}

  const WeightMultiset& times(const Weight& w) {
    auto it = memo_.find(w);
    if (it == memo_.end()) {
      it = memo_.emplace(w, schur::tensor(WeightMultiset(n_, {{w, 1}}), factor_)).first;
    }
    return it->second;
  }

  template <class Visit>
  void for_each(const WeightMultiset& pool, const WeightMultiset& base,
                std::optional<BigInt> max_dim, std::optional<std::int64_t> max_trivials,
                Visit&& visit) {
    std::vector<std::pair<Weight, std::int64_t>> slots(pool.entries().begin(),
                                                       pool.entries().end());
    const Weight triv = Weight::trivial(n_);
    WeightMultiset x(n_);
    std::map<Weight, std::int64_t> cover;  // x ⊗ factor restricted to base's support
    BigInt dim = 0;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == slots.size()) {
        if (x.empty()) return;
        for (const auto& [w, m] : base.entries()) {
          auto it = cover.find(w);
          if (it == cover.end() || it->second < m) return;
        }
        visit(x);
        return;
      }
      const auto& [w, cap] = slots[i];
      const BigInt wd = schur::weyl_dim(w);
      std::int64_t limit = cap;
      if (w == triv && max_trivials) limit = std::min(limit, *max_trivials);
      const auto& wt = times(w);
      std::int64_t c = 0;
      go(i + 1);
      while (c < limit) {
        if (max_dim && dim + wd > *max_dim) break;
        ++c;
        x.add(w);
        dim += wd;
        for (const auto& [u, m] : wt.entries()) {
          if (base.multiplicity(u) > 0) cover[u] += m;
        }
        go(i + 1);
      }
      if (c > 0) {
        x.remove(w, c);
        dim -= wd * c;
        for (const auto& [u, m] : wt.entries()) {
          if (base.multiplicity(u) > 0) cover[u] -= m * c;
        }
      }
    };
    go(0);
  }

 private:
  int n_;
  WeightMultiset factor_;
  std::map<Weight, WeightMultiset> memo_;
};

}  // namespace

std::vector<WeightMultiset> bad_multisets(int n, const CatalogConfig& config, bool* truncated) {
  const int max_summands = config.max_bad_summands > 0 ? config.max_bad_summands : n * n;
  std::vector<Weight> atoms;
  for (const auto& w : repclass::bad_list(n)) {
    if (!w.is_trivial()) atoms.push_back(w);
  }
  std::vector<WeightMultiset> out;
  WeightMultiset cur(n);
  std::function<void(std::size_t, int)> go = [&](std::size_t from, int size) {
    out.push_back(cur);
    if (size == max_summands) {
      if (truncated) *truncated = true;
      return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      cur.add(atoms[i]);
      const auto c = repclass::classify(SemisimpleRep(cur), config.stabilizer);
      if (c.verdict == repclass::Classification::Bad) go(i, size + 1);
      cur.remove(atoms[i]);
    }
  };
  go(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Catalog enumerate_exceptional_candidates(int n, const CatalogConfig& config) {
  if (n < 2) throw std::invalid_argument("enumerate_exceptional_candidates: need n ≥ 2");
  const std::int64_t trivial_threshold = static_cast<std::int64_t>(n) * n - 2;
  const std::int64_t dim_threshold = static_cast<std::int64_t>(n) * n + 2 * n - 1;
  const std::int64_t max_trivials = config.max_trivials.value_or(trivial_threshold);
  if (max_trivials > trivial_threshold || max_trivials < 0) {
    throw ResourceLimitError("max-trivials", "max_trivials = " + std::to_string(max_trivials) +
                                                 " outside [0, n²-2 = " +
                                                 std::to_string(trivial_threshold) + "]");
  }
  const std::int64_t max_dim_s = config.max_dim_s.value_or(dim_threshold);
  if (max_dim_s > dim_threshold || max_dim_s < 1) {
    throw ResourceLimitError("max-dim-s", "max_dim_s = " + std::to_string(max_dim_s) +
                                              " outside [1, n²+2n-1 = " +
                                              std::to_string(dim_threshold) + "]");
  }

  // (Q, S) -> trigger; the bad-Q route runs first and keeps its label.
  std::map<std::pair<WeightMultiset, WeightMultiset>, Trigger> found;
  Partner up(n, standard(n));
  Partner down(n, standard_dual(n));
  const Weight triv = Weight::trivial(n);
  Catalog catalog;

  std::optional<BigInt> route1_dim;
  if (config.max_dim_s) route1_dim = BigInt(static_cast<long>(max_dim_s));
  for (const auto& b : bad_multisets(n, config, &catalog.summary.truncated)) {
    for (std::int64_t t = 0; t <= max_trivials; ++t) {
      WeightMultiset q = b;
      if (t > 0) q.add(triv, t);
      if (q.empty()) continue;
      WeightMultiset pool(n);
      for (const auto& [w, m] : q.entries()) {
        for (const auto& [u, k] : up.times(w).entries()) pool.add(u, k * m);
      }
      down.for_each(pool, q, route1_dim, std::nullopt, [&](const WeightMultiset& s) {
        found.emplace(std::make_pair(q, s), Trigger::QBad);
      });
    }
  }

  // Small S: every multiset of dimension ≤ max_dim_s.
  const BigInt dim_cap(static_cast<long>(max_dim_s));
  const auto atoms = irreps_up_to_dim(n, dim_cap);
  WeightMultiset s(n);
  BigInt s_dim = 0;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!s.empty()) {
      WeightMultiset pool(n);
      for (const auto& [w, m] : s.entries()) {
        for (const auto& [u, k] : down.times(w).entries()) pool.add(u, k * m);
      }
      up.for_each(pool, s, std::nullopt, max_trivials, [&](const WeightMultiset& q) {
        found.emplace(std::make_pair(q, s), Trigger::DimSSmall);
      });
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      const BigInt d = schur::weyl_dim(atoms[i]);
      if (s_dim + d > dim_cap) break;  // atoms are sorted by dimension
      s.add(atoms[i]);
      s_dim += d;
      grow(i);
      s.remove(atoms[i]);
      s_dim -= d;
    }
  };
  grow(0);

  for (const auto& [key, trigger] : found) {
    CatalogEntry e;
    e.n = n;
    e.Q = SemisimpleRep(key.first);
    e.S = SemisimpleRep(key.second);
    e.trigger = trigger;
    rationality::TwoStepExtension ext{n, e.S, e.Q, SemisimpleRep(WeightMultiset(n)), std::nullopt};
    e.verdict = rationality::decide_rationality(ext, config.stabilizer);
    ++catalog.summary.by_trigger[to_string(trigger)];
    ++catalog.summary.by_outcome[rationality::to_string(e.verdict.outcome)];
    catalog.entries.push_back(std::move(e));
  }
  catalog.summary.total = catalog.entries.size();
  return catalog;
}

std::string render_summary(const CatalogSummary& s) {
  std::ostringstream os;
  os << "# entries " << s.total << "\n";
  for (const auto& [k, v] : s.by_trigger) os << "# trigger " << k << " " << v << "\n";
  for (const auto& [k, v] : s.by_outcome) os << "# outcome " << k << " " << v << "\n";
  if (s.truncated) os << "# bad-multiset search truncated at max_bad_summands\n";
  return os.str();
}

}  // namespace saff::catalog
