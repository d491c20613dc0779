#include <doctest.h>

#include "oracles.hpp"
#include "saff/irrep_model.hpp"
#include "saff/repclass.hpp"
#include "saff/schur.hpp"
#include "saff/sl.hpp"

using namespace saff;
using repclass::Classification;

namespace {

Weight W(std::vector<int> p) { return Weight(static_cast<int>(p.size()), p); }
SemisimpleRep rep(int n, std::initializer_list<std::pair<Weight, std::int64_t>> e) {
  return SemisimpleRep(WeightMultiset(n, e));
}
Weight ad0(int n) {
  std::vector<int> p(n, 1);
  p[0] = 2;
  p[n - 1] = 0;
  return Weight(n, p);
}

}  // namespace

TEST_CASE("bad list") {
  const auto l10 = repclass::bad_list(10);
  CHECK(l10.contains(Weight::wedge(10, 2)));
  CHECK(l10.contains(schur::dual(Weight::wedge(10, 2))));
  CHECK(l10.contains(Weight(10, {1, 1, 1, 1, 1, 1, 1, 1, 0, 0})));
  const auto l3 = repclass::bad_list(3);
  CHECK(l3.contains(W({2, 1, 0})));
  CHECK(l3.contains(W({1, 1, 0})));
  // Λ² = standard dual at n = 3, Ad0 self-dual: 6 distinct weights.
  CHECK(l3.size() == 6);
  CHECK(repclass::list_is_authoritative(10));
  CHECK_FALSE(repclass::list_is_authoritative(9));
}

TEST_CASE("tensor models satisfy the sl_n relations and have the right character") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<Weight> ws{Weight::trivial(n), Weight::sym(n, 1), Weight::sym(n, 2), ad0(n),
                           Weight::wedge(n, n - 1)};
    if (n == 3) ws.push_back(W({3, 1, 0}));
    if (n == 4) ws.push_back(W({2, 2, 1, 0}));
    for (const auto& w : ws) {
      const auto m = repclass::build_tensor_model(w);
      CHECK(BigInt(static_cast<long>(m.dim)) == schur::weyl_dim(w));
      const int d = sl::dim(n);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          auto lhs = linalg::commutator(m.sl_gens[a], m.sl_gens[b]);
          const auto coeff = sl::bracket(n, a, b);
          linalg::SparseMatrix rhs(m.dim, m.dim);
          for (int c = 0; c < d; ++c) {
            if (coeff[c] != 0) rhs = rhs + coeff[c] * m.sl_gens[c];
          }
          CHECK((lhs - rhs).is_zero());
        }
      }
      // Character from the grading against the Schur polynomial (monomial
      // exponents of x_i are the GL weights).
      std::map<std::vector<int>, long> chr;
      for (const auto& g : m.grading) ++chr[g];
      std::map<std::vector<int>, long> want;
      for (const auto& [e, c] : schur::schur_polynomial(w.parts(), n)) want[e] = c.get_si();
      CHECK(chr == want);
    }
  }
}

TEST_CASE("defining representation of sl_2") {
  const auto m = repclass::build_tensor_model(W({1, 0}));
  CHECK(m.dim == 2);
  // E_01 maps e_1 to e_0 (up to the basis order, which is by decreasing weight).
  CHECK(m.sl_gens[sl::index_of_e(2, 0, 1)].at(0, 1) != 0);
}

TEST_CASE("stabilizer dimensions against direct classical computations") {
  for (int n = 3; n <= 4; ++n) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      repclass::StabilizerOptions o;
      o.seed = seed;
      const auto std_dim = repclass::stabilizer_dimension(rep(n, {{Weight::sym(n, 1), 1}}), o).stab_dim;
      CHECK(std_dim == oracle::stabilizer_dim(n, oracle::Action::Vector, 1, seed));
      CHECK(std_dim == n * n - 1 - n);
      const auto adj = repclass::stabilizer_dimension(rep(n, {{ad0(n), 1}}), o).stab_dim;
      CHECK(adj == oracle::stabilizer_dim(n, oracle::Action::Adjoint, 1, seed));
      CHECK(adj == n - 1);
      const auto sym2 = repclass::stabilizer_dimension(rep(n, {{Weight::sym(n, 2), 1}}), o).stab_dim;
      CHECK(sym2 == oracle::stabilizer_dim(n, oracle::Action::Quadric, 1, seed));
      CHECK(sym2 == n * (n - 1) / 2);
      const auto frame = repclass::stabilizer_dimension(rep(n, {{Weight::sym(n, 1), n}}), o).stab_dim;
      CHECK(frame == oracle::stabilizer_dim(n, oracle::Action::Vector, n, seed));
      CHECK(frame == 0);
      if (n == 4) {
        const auto wedge = repclass::stabilizer_dimension(rep(4, {{Weight::wedge(4, 2), 1}}), o).stab_dim;
        CHECK(wedge == oracle::stabilizer_dim(4, oracle::Action::TwoForm, 1, seed));
        CHECK(wedge == 10);
      }
    }
  }
}

TEST_CASE("every irreducible on the list has a positive stabilizer for n = 3, 4") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& w : repclass::bad_list(n)) {
      CHECK(repclass::stabilizer_dimension(rep(n, {{w, 1}})).stab_dim > 0);
    }
  }
}

TEST_CASE("stabilizer reports are reproducible") {
  repclass::StabilizerOptions o;
  o.seed = 99;
  const auto a = repclass::stabilizer_dimension(rep(3, {{Weight::sym(3, 2), 2}}), o);
  const auto b = repclass::stabilizer_dimension(rep(3, {{Weight::sym(3, 2), 2}}), o);
  CHECK(a.stab_dim == b.stab_dim);
  CHECK(a.seed == 99);
  CHECK(a.trials == 3);
}

TEST_CASE("classify") {
  CHECK(repclass::classify(rep(10, {{Weight::wedge(10, 2), 1}})).verdict == Classification::Bad);
  const auto sym3 = repclass::classify(rep(3, {{Weight::sym(3, 3), 1}}));
  CHECK(sym3.verdict == Classification::Good);
  CHECK(sym3.off_list_witness == Weight::sym(3, 3));
  const auto frame = repclass::classify(rep(3, {{Weight::sym(3, 1), 3}}));
  CHECK(frame.verdict == Classification::GoodHeuristic);
  REQUIRE(frame.stabilizer);
  CHECK(frame.stabilizer->stab_dim == 0);
  CHECK(repclass::classify(rep(3, {{Weight::trivial(3), 7}})).verdict == Classification::Bad);
  CHECK(repclass::classify(SemisimpleRep(WeightMultiset(3))).verdict == Classification::Bad);
}

TEST_CASE("classify is monotone under adding summands") {
  const auto list = repclass::bad_list(3);
  std::vector<Weight> atoms(list.begin(), list.end());
  atoms.push_back(W({3, 0, 0}));
  std::mt19937_64 g(5);
  for (int t = 0; t < 40; ++t) {
    WeightMultiset m(3);
    const int k = 1 + static_cast<int>(g() % 3);
    for (int i = 0; i < k; ++i) m.add(atoms[g() % atoms.size()]);
    if (!repclass::is_good(repclass::classify(SemisimpleRep(m)).verdict)) continue;
    auto bigger = m;
    bigger.add(atoms[g() % atoms.size()]);
    CHECK(repclass::is_good(repclass::classify(SemisimpleRep(bigger)).verdict));
  }
}

TEST_CASE("minimal good power") {
  // Three generic vectors of C^3 have a finite stabilizer, two do not.
  CHECK(repclass::minimal_good_power(Weight::sym(3, 1), 5) == 3);
  CHECK_FALSE(repclass::minimal_good_power(Weight::trivial(3), 4).has_value());
}
