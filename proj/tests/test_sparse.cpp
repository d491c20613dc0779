#include <doctest.h>

#include "oracles.hpp"
#include "saff/sparse.hpp"

using namespace saff;
using namespace saff::linalg;

TEST_CASE("rational parsing and printing") {
  Rational half(3, 6);
  half.canonicalize();
  CHECK(to_string(half) == "1/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("subspace reduction and coordinates") {
  Subspace s(4);
  CHECK(s.insert(SparseVec({{0, 1}, {2, 2}})));
  CHECK(s.insert(SparseVec({{1, 3}, {2, 1}})));
  CHECK_FALSE(s.insert(SparseVec({{0, 2}, {1, 6}, {2, 6}})));
  CHECK(s.dim() == 2);
  const SparseVec v({{0, 5}, {1, 3}, {2, 11}});
  CHECK(s.contains(v));
  const auto c = s.coordinates(v);
  SparseVec back;
  for (std::size_t i = 0; i < c.size(); ++i) back.axpy(c[i], s.basis()[i]);
  CHECK(back == v);
  CHECK_FALSE(s.contains(SparseVec::unit(3)));
}

TEST_CASE("kernel and rank agree with dense elimination") {
  std::mt19937_64 g(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 2 + g() % 4, c = 2 + g() % 5;
    auto dense = oracle::random_matrix(g, r, c);
    // Force some dependence.
    if (c > 2) for (std::size_t i = 0; i < r; ++i) dense[i][c - 1] = dense[i][0] - dense[i][1];
    const auto m = SparseMatrix::from_dense(dense);
    std::vector<SparseVec> cols;
    for (std::size_t j = 0; j < c; ++j) cols.push_back(m.column(j));
    const auto rk = rank(cols, r);
    CHECK(static_cast<int>(rk) == oracle::rank(dense));
    std::vector<std::size_t> domain(c);
    for (std::size_t j = 0; j < c; ++j) domain[j] = j;
    const auto ker = kernel(domain, [&](std::size_t j) { return m.column(j); });
    CHECK(ker.size() + rk == c);
    for (const auto& k : ker) CHECK(m.apply(k).empty());
  }
}

TEST_CASE("coordinate solver") {
  const std::vector<SparseVec> basis{SparseVec({{0, 1}, {1, 1}}), SparseVec({{1, 1}, {2, 1}})};
  CoordinateSolver s(basis);
  const auto c = s.solve(SparseVec({{0, 2}, {1, 5}, {2, 3}}));
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK_FALSE(s.solve(SparseVec::unit(0)));
}

TEST_CASE("kron and products") {
  const auto a = SparseMatrix::from_dense({{1, 2}, {0, 1}});
  const auto b = SparseMatrix::from_dense({{0, 1}, {1, 0}});
  const auto k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.at(0, 1) == 1);
  CHECK(k.at(0, 3) == 2);
  CHECK(k.at(2, 3) == 1);
  CHECK((a * b).at(0, 0) == 2);
  CHECK(commutator(a, a).is_zero());
  CHECK(a.transpose().transpose() == a);
}
