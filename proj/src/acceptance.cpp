#include "saff/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "saff/catalog.hpp"
#include "saff/filtration.hpp"
#include "saff/json_io.hpp"
#include "saff/rationality.hpp"
#include "saff/reference_models.hpp"
#include "saff/repclass.hpp"
#include "saff/schur.hpp"

namespace saff::acceptance {

namespace {

using matmodel::AffMatrixRep;

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// Normalized weights of rank n with |λ| ≤ max_size.
std::vector<Weight> small_weights(int n, int max_size) {
  std::vector<Weight> out;
  std::vector<int> parts(n, 0);
  std::function<void(int, int, int)> go = [&](int i, int left, int cap) {
    if (i == n - 1) {
      out.emplace_back(n, parts);
      return;
    }
    for (int v = 0; v <= std::min(left, cap); ++v) {
      parts[i] = v;
      go(i + 1, left - v, v);
    }
    parts[i] = 0;
  };
  // The first part bounds the rest, so iterate it from the top.
  for (int first = 0; first <= max_size; ++first) {
    parts[0] = first;
    if (n == 1) {
      if (first == 0) out.emplace_back(n, parts);
      continue;
    }
    go(1, max_size - first, first);
  }
  return out;
}

Outcome lr_oracle() {
  std::size_t pairs = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto ws = small_weights(n, 4);
    for (const auto& a : ws) {
      for (const auto& b : ws) {
        WeightMultiset factors(n);
        factors.add(a);
        factors.add(b);
        WeightMultiset oracle(n);
        for (const auto& [lambda, c] : schur::schur_expand(schur::schur_oracle(factors, n), n)) {
          oracle.add(schur::normalize(n, lambda), c.get_si());
        }
        if (oracle != schur::lr_decompose(a, b)) {
          return fail("mismatch at n=" + std::to_string(n) + " " + a.to_string() + " ⊗ " +
                      b.to_string());
        }
        ++pairs;
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome canonical_filtration() {
  std::size_t models = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int l = 0; l <= 4; ++l) {
      const auto f = filtration::socle_filtration(matmodel::model_sym_dual(n, l));
      if (f.layers.size() != static_cast<std::size_t>(l + 1)) {
        return fail("n=" + std::to_string(n) + " l=" + std::to_string(l) + ": wrong length");
      }
      for (int i = 0; i <= l; ++i) {
        const WeightMultiset want(n, {{schur::dual(Weight::sym(n, i)), 1}});
        if (f.layers[i] != want) {
          return fail("n=" + std::to_string(n) + " l=" + std::to_string(l) + " layer " +
                      std::to_string(i) + " = " + f.layers[i].to_string());
        }
      }
      ++models;
    }
  }
  return {true, std::to_string(models) + " models"};
}

WeightMultiset duals(int n, std::initializer_list<std::vector<int>> labels) {
  WeightMultiset m(n);
  for (auto l : labels) {
    l.resize(n, 0);
    m.add(schur::dual(Weight::normalize(n, l)));
  }
  return m;
}

Outcome compare_layers(const char* what, const std::vector<WeightMultiset>& got,
                       const std::vector<WeightMultiset>& want) {
  if (got == want) return {};
  std::string g;
  for (const auto& x : got) g += " | " + x.to_string();
  return fail(std::string(what) + " layers" + g);
}

Outcome reference_examples() {
  const auto a = models::dual_standard_quadric(3);
  const auto ra = filtration::radical_filtration(a);
  const auto sa = filtration::socle_filtration(a);
  if (auto o = compare_layers("n=3 radical", ra.layers,
                              {duals(3, {{1}}), duals(3, {{2}}), duals(3, {{3}, {1, 1}})});
      !o.passed) {
    return o;
  }
  if (auto o = compare_layers("n=3 socle", sa.layers,
                              {duals(3, {{1}}), duals(3, {{2}, {1, 1}}), duals(3, {{3}})});
      !o.passed) {
    return o;
  }
  const auto b = models::cubic_quadric(4);
  const auto rb = filtration::radical_filtration(b);
  const auto sb = filtration::socle_filtration(b);
  if (auto o = compare_layers("n=4 radical", rb.layers,
                              {duals(4, {{3}}), duals(4, {{4}, {2, 1}, {1, 1, 1}}),
                               duals(4, {{5}, {3, 1}, {2, 1, 1}})});
      !o.passed) {
    return o;
  }
  if (auto o = compare_layers("n=4 socle", sb.layers,
                              {duals(4, {{3}, {2, 1}, {1, 1, 1}}), duals(4, {{4}, {3, 1}, {2, 1, 1}}),
                               duals(4, {{5}})});
      !o.passed) {
    return o;
  }
  return {true, "dims " + std::to_string(a.dim()) + ", " + std::to_string(b.dim())};
}

template <class Check>
Outcome sweep(Check&& check) {
  std::size_t count = 0;
  for (const auto& [name, rep] : filtration_sweep_models()) {
    if (!check(rep)) return fail("fails on " + name);
    ++count;
  }
  return {true, std::to_string(count) + " models"};
}

Outcome lr_gap() {
  const int n = 4;
  std::size_t cases = 0;
  for (const auto& w : catalog::irreps_up_to_dim(n, 100000)) {
    if (w[0] > 5) continue;
    for (int k = 0; k <= 5; ++k) {
      if (!schur::check_lr_gap_bound(w, k)) {
        return fail("W = " + w.to_string() + ", k = " + std::to_string(k));
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " (W, k) cases"};
}

Outcome stabilizers(std::uint64_t seed) {
  std::size_t runs = 0;
  for (int n = 3; n <= 4; ++n) {
    std::vector<int> ad0(n, 1);
    ad0[0] = 2;
    ad0[n - 1] = 0;
    std::vector<std::pair<WeightMultiset, int>> cases = {
        {WeightMultiset(n, {{Weight::sym(n, 1), 1}}), n * n - 1 - n},
        {WeightMultiset(n, {{Weight(n, ad0), 1}}), n - 1},
        {WeightMultiset(n, {{Weight::sym(n, 2), 1}}), n * (n - 1) / 2},
        {WeightMultiset(n, {{Weight::sym(n, 1), n}}), 0},
    };
    if (n == 4) cases.push_back({WeightMultiset(n, {{Weight::wedge(n, 2), 1}}), 10});
    for (const auto& [m, want] : cases) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        repclass::StabilizerOptions o;
        o.seed = seed + s;
        const auto r = repclass::stabilizer_dimension(SemisimpleRep(m), o);
        if (r.stab_dim != want) {
          return fail(m.to_string() + " seed " + std::to_string(o.seed) + ": " +
                      std::to_string(r.stab_dim) + " != " + std::to_string(want));
        }
        ++runs;
      }
    }
  }
  return {true, std::to_string(runs) + " runs"};
}

rationality::TwoStepExtension ext(int n, WeightMultiset s, WeightMultiset q, WeightMultiset w,
                                  std::optional<bool> assume = std::nullopt) {
  return {n, SemisimpleRep(std::move(s)), SemisimpleRep(std::move(q)), SemisimpleRep(std::move(w)),
          assume};
}

Outcome decisions(std::uint64_t seed) {
  using rationality::Outcome;
  repclass::StabilizerOptions o;
  o.seed = seed;
  auto expect = [&](const char* name, const rationality::TwoStepExtension& e, Outcome want) -> std::optional<std::string> {
    const auto v = rationality::decide_rationality(e, o);
    if (v.outcome != want) {
      return std::string(name) + ": got " + rationality::to_string(v.outcome);
    }
    return std::nullopt;
  };
  const Weight triv3 = Weight::trivial(3);
  const Weight std3 = Weight::sym(3, 1);
  const Weight sym3_dual(3, {3, 3, 0});
  const Weight s_a(3, {4, 3, 0});
  const auto by_b = ext(3, WeightMultiset(3, {{std3, 8}}), WeightMultiset(3, {{triv3, 8}}),
                        WeightMultiset(3), true);
  const auto by_a = ext(3, WeightMultiset(3, {{s_a, 1}}), WeightMultiset(3, {{sym3_dual, 1}}),
                        WeightMultiset(3));
  const auto exceptional = ext(10, WeightMultiset(10, {{Weight::wedge(10, 3), 1}}),
                               WeightMultiset(10, {{Weight::wedge(10, 2), 1}}), WeightMultiset(10), true);
  const auto not_free = ext(3, WeightMultiset(3, {{Weight::sym(3, 2), 1}}),
                            WeightMultiset(3, {{std3, 1}}), WeightMultiset(3));
  for (const auto& msg : {expect("B instance", by_b, Outcome::RationalByB),
                          expect("A instance", by_a, Outcome::RationalByA),
                          expect("exceptional instance", exceptional, Outcome::Exceptional),
                          expect("R1 instance", not_free, Outcome::PossiblyNotGenericallyFree)}) {
    if (msg) return fail(*msg);
  }

  // Monotonicity: random good summands added to W keep (A).
  std::vector<Weight> good;
  for (const auto& w : catalog::irreps_up_to_dim(3, 24)) {
    if (repclass::classify(SemisimpleRep(WeightMultiset(3, {{w, 1}})), o).verdict ==
        repclass::Classification::Good) {
      good.push_back(w);
    }
  }
  std::mt19937_64 gen(seed);
  const auto base = rationality::decide_rationality(by_a, o);
  for (int trial = 0; trial < 100; ++trial) {
    auto bigger = by_a;
    WeightMultiset w(3);
    const int extra = 1 + static_cast<int>(gen() % 3);
    for (int i = 0; i < extra; ++i) w.add(good[gen() % good.size()]);
    bigger.W = SemisimpleRep(w);
    const auto v = rationality::decide_rationality(bigger, o);
    if (v.outcome != Outcome::RationalByA) {
      return fail("augmentation W = " + w.to_string() + " gave " + rationality::to_string(v.outcome));
    }
  }
  (void)base;
  return {true, "4 instances, 100 augmentations over " + std::to_string(good.size()) + " good irreps"};
}

std::string catalog_text(const catalog::Catalog& c) {
  std::string out;
  for (const auto& e : c.entries) out += io::to_json(e).dump() + "\n";
  return out + catalog::render_summary(c.summary);
}

Outcome catalog_check(std::uint64_t seed) {
  catalog::CatalogConfig cfg;
  cfg.stabilizer.seed = seed;
  const auto first = catalog::enumerate_exceptional_candidates(3, cfg);
  const auto second = catalog::enumerate_exceptional_candidates(3, cfg);
  if (catalog_text(first) != catalog_text(second)) return fail("runs differ");
  for (const auto& e : first.entries) {
    rationality::TwoStepExtension x{3, e.S, e.Q, SemisimpleRep(WeightMultiset(3)), std::nullopt};
    if (!rationality::check_structural(x)) return fail("structural: Q = " + e.Q.summands().to_string());
    if (e.Q.trivial_count() >= 8) return fail("trivial count: Q = " + e.Q.summands().to_string());
    const bool clause =
        e.trigger == catalog::Trigger::QBad
            ? repclass::classify(e.Q, cfg.stabilizer).verdict == repclass::Classification::Bad
            : e.S.dimension() < 15;
    if (!clause) return fail("trigger clause: Q = " + e.Q.summands().to_string());
  }
  return {true, std::to_string(first.entries.size()) + " entries, byte-identical"};
}

}  // namespace

std::vector<std::pair<std::string, AffMatrixRep>> filtration_sweep_models() {
  std::vector<std::pair<std::string, AffMatrixRep>> out;
  for (int n = 2; n <= 3; ++n) {
    const auto std_model = matmodel::sl_only_model(Weight::sym(n, 1));
    const auto std_dual = matmodel::dual_model(std_model);
    for (int l = 0; l <= 4; ++l) {
      const std::string tag = "(n=" + std::to_string(n) + ",l=" + std::to_string(l) + ")";
      const auto base = matmodel::model_sym_dual(n, l);
      out.emplace_back("Sym^l dual " + tag, base);
      out.emplace_back("Sym^l " + tag, matmodel::dual_model(base));
      if (l <= 3) {
        out.emplace_back("dual std ⊗ Sym^l dual " + tag, matmodel::tensor_model(std_dual, base));
        out.emplace_back("std ⊗ Sym^l dual " + tag, matmodel::tensor_model(std_model, base));
        out.emplace_back("Sym^l dual ⊕ Sym^1 " + tag,
                         matmodel::direct_sum_model({base, matmodel::dual_model(matmodel::model_sym_dual(n, 1))}));
      }
    }
  }
  out.emplace_back("mixed submodule (n=3)", models::dual_standard_quadric(3));
  return out;
}

std::vector<CriterionResult> run(const Options& opts, std::ostream* progress) {
  using Fn = std::function<Outcome()>;
  const std::vector<std::tuple<int, std::string, Fn>> table = {
      {1, "LR-oracle equivalence", lr_oracle},
      {2, "canonical filtration reproduction", canonical_filtration},
      {3, "reference example reproduction", reference_examples},
      {4, "degree bound", [] {
         return sweep([](const AffMatrixRep& r) {
           return filtration::verify_degree_bound(r, filtration::socle_filtration(r)) &&
                  filtration::verify_degree_bound(r, filtration::radical_filtration(r));
         });
       }},
      {5, "duality", [] { return sweep([](const AffMatrixRep& r) { return filtration::check_duality(r); }); }},
      {6, "blocks containment and embedding", [] {
         return sweep([](const AffMatrixRep& r) {
           return filtration::check_blocks_containment(filtration::socle_filtration(r)) &&
                  filtration::check_blocks_containment(filtration::radical_filtration(r)) &&
                  filtration::check_embedding_theorem(r);
         });
       }},
      {7, "LR gap inequality", lr_gap},
      {8, "stabilizer regressions", [&] { return stabilizers(opts.seed); }},
      {9, "decision procedure", [&] { return decisions(opts.seed); }},
      {10, "catalog determinism and finiteness", [&] { return catalog_check(opts.seed); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& [id, name, fn] : table) {
    if (!opts.only.empty() && !opts.only.contains(id)) continue;
    CriterionResult r{id, name, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto o = fn();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) *progress << format_line(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << "  ("
     << r.detail << "; " << std::fixed << std::setprecision(2) << r.seconds << "s)";
  return os.str();
}

}  // namespace saff::acceptance
