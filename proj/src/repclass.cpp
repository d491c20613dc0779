#include "saff/repclass.hpp"

#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "saff/schur.hpp"
#include "saff/sl.hpp"
#include "saff/sparse.hpp"

namespace saff::repclass {

using linalg::SparseVec;

std::set<Weight> bad_list(int n) {
  if (n < 2) throw std::invalid_argument("bad_list: need n ≥ 2");
  std::vector<int> ad0(n, 1);
  ad0[0] = 2;
  ad0[n - 1] = 0;
  const Weight irreducibles[] = {Weight::wedge(n, 2), Weight::sym(n, 2), Weight::sym(n, 1),
                                 Weight::trivial(n), Weight(n, ad0)};
  std::set<Weight> out;
  for (const auto& w : irreducibles) {
    out.insert(w);
    out.insert(schur::dual(w));
  }
  return out;
}

bool list_is_authoritative(int n) { return n > 9; }

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Good: return "Good";
    case Classification::Bad: return "Bad";
    case Classification::GoodHeuristic: return "GoodHeuristic";
  }
  return "?";
}

bool is_good(Classification c) { return c != Classification::Bad; }

namespace {

// Platform-independent draw in [-bound, bound] from the standardized
// mt19937_64 output sequence.
std::int64_t draw(std::mt19937_64& gen, int bound) {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  return static_cast<std::int64_t>(gen() % span) - bound;
}

}  // namespace

StabilizerReport stabilizer_dimension(const SemisimpleRep& rep, const StabilizerOptions& opts) {
  const int n = rep.rank();
  if (opts.trials < 1) throw std::invalid_argument("stabilizer_dimension: trials must be positive");
  std::vector<std::shared_ptr<const IrrepModel>> blocks;
  for (const auto& [w, m] : rep.summands().entries()) {
    auto model = cached_tensor_model(w, opts.max_model_dim);
    for (std::int64_t k = 0; k < m; ++k) blocks.push_back(model);
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b->dim;

  std::mt19937_64 gen(opts.seed);
  const int sd = sl::dim(n);
  int best = sd;
  for (int t = 0; t < opts.trials; ++t) {
    // One random point per block, then X_a·v block by block.
    std::vector<SparseVec> points;
    for (const auto& b : blocks) {
      std::vector<linalg::Entry> e;
      for (std::size_t i = 0; i < b->dim; ++i) {
        const auto x = draw(gen, opts.bound);
        if (x != 0) e.emplace_back(i, Rational(static_cast<long>(x)));
      }
      points.emplace_back(std::move(e));
    }
    std::vector<SparseVec> columns;
    for (int a = 0; a < sd; ++a) {
      SparseVec col;
      std::size_t offset = 0;
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        col.axpy(1, blocks[k]->sl_gens[a].apply(points[k]).shifted(offset));
        offset += blocks[k]->dim;
      }
      columns.push_back(std::move(col));
    }
    const int r = static_cast<int>(linalg::rank(columns, total));
    best = std::min(best, sd - r);
  }
  return {rep, best, opts.trials, opts.seed};
}

ClassifyResult classify(const SemisimpleRep& rep, const StabilizerOptions& opts) {
  using Key = std::tuple<WeightMultiset, std::uint64_t, int, int>;
  static std::mutex mu;
  static std::map<Key, ClassifyResult> cache;
  const Key key{rep.summands(), opts.seed, opts.trials, opts.bound};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const int n = rep.rank();
  ClassifyResult result;
  result.list_authoritative = list_is_authoritative(n);
  const auto bad = bad_list(n);
  for (const auto& [w, m] : rep.summands().entries()) {
    if (!bad.contains(w)) {
      result.verdict = Classification::Good;
      result.off_list_witness = w;
      break;
    }
  }
  if (!result.off_list_witness) {
    if (rep.summands().empty()) {
      result.verdict = Classification::Bad;
    } else {
      auto report = stabilizer_dimension(rep, opts);
      result.verdict = report.stab_dim > 0 ? Classification::Bad : Classification::GoodHeuristic;
      result.stabilizer = std::move(report);
    }
  }
  std::lock_guard lock(mu);
  cache.emplace(key, result);
  return result;
}

std::optional<int> minimal_good_power(const Weight& r, int max_t, const StabilizerOptions& opts) {
  for (int t = 1; t <= max_t; ++t) {
    WeightMultiset m(r.rank());
    m.add(r, t);
    if (is_good(classify(SemisimpleRep(m), opts).verdict)) return t;
  }
  return std::nullopt;
}

}  // namespace saff::repclass
