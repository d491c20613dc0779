#include "saff/matmodel.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "saff/errors.hpp"
#include "saff/irrep_model.hpp"
#include "saff/sl.hpp"

namespace saff::matmodel {

using linalg::Subspace;

AffMatrixRep::AffMatrixRep(int n, std::vector<SparseMatrix> sl_gens,
                           std::vector<SparseMatrix> trans_gens,
                           std::vector<std::vector<int>> grading)
    : n_(n),
      dim_(grading.size()),
      sl_gens_(std::move(sl_gens)),
      trans_gens_(std::move(trans_gens)),
      grading_(std::move(grading)) {
  if (n < 1) throw ValidationError("rank must be positive");
  if (static_cast<int>(sl_gens_.size()) != sl::dim(n)) {
    throw ValidationError("expected " + std::to_string(sl::dim(n)) + " sl_n generators, got " +
                          std::to_string(sl_gens_.size()));
  }
  if (static_cast<int>(trans_gens_.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " translation generators, got " +
                          std::to_string(trans_gens_.size()));
  }
  for (const auto& g : grading_) {
    if (static_cast<int>(g.size()) != n) throw ValidationError("grading vector of wrong length");
  }
  auto check = [&](const SparseMatrix& m, const char* what) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw ValidationError(std::string(what) + " generator is not " + std::to_string(dim_) + "x" +
                            std::to_string(dim_));
    }
  };
  for (const auto& m : sl_gens_) check(m, "sl_n");
  for (const auto& m : trans_gens_) check(m, "translation");
}

namespace {

std::string gen_name(int n, int a) {
  const int off = n * (n - 1);
  if (a >= off) return "H" + std::to_string(a - off + 1);
  const int i = a / (n - 1);
  int j = a % (n - 1);
  if (j >= i) ++j;
  return "E" + std::to_string(i + 1) + std::to_string(j + 1);
}

SparseMatrix combination(const std::vector<SparseMatrix>& gens, const std::vector<Rational>& c,
                         std::size_t dim) {
  SparseMatrix out(dim, dim);
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a] != 0) out = out + c[a] * gens[a];
  }
  return out;
}

bool is_nilpotent(const SparseMatrix& t) {
  SparseMatrix p = t;
  for (std::size_t k = 0; k <= t.rows(); ++k) {
    if (p.is_zero()) return true;
    p = t * p;
  }
  return p.is_zero();
}

}  // namespace

std::optional<std::string> first_violation(const AffMatrixRep& rep) {
  const int n = rep.rank();
  const std::size_t dim = rep.dim();
  const auto& x = rep.sl_gens();
  const auto& t = rep.trans_gens();
  const auto& g = rep.grading();
  const int sd = sl::dim(n);

  for (int a = 0; a < sd; ++a) {
    for (int b = a + 1; b < sd; ++b) {
      if (commutator(x[a], x[b]) != combination(x, sl::bracket(n, a, b), dim)) {
        return "bracket [" + gen_name(n, a) + ", " + gen_name(n, b) + "] fails";
      }
    }
  }
  for (int a = 0; a < sd; ++a) {
    const auto m = sl::matrix(n, a);
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> c(n, 0);
      for (int i = 0; i < n; ++i) c[i] = m[i][k];
      if (commutator(x[a], t[k]) != combination(t, c, dim)) {
        return "bracket [" + gen_name(n, a) + ", T" + std::to_string(k + 1) + "] fails";
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!commutator(t[i], t[j]).is_zero()) {
        return "translations T" + std::to_string(i + 1) + ", T" + std::to_string(j + 1) +
               " do not commute";
      }
    }
    if (!is_nilpotent(t[i])) return "translation T" + std::to_string(i + 1) + " is not nilpotent";
  }

  auto shifted_ok = [&](const SparseMatrix& m, const std::vector<int>& shift) {
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<int> target = g[k];
      for (int i = 0; i < n; ++i) target[i] += shift[i];
      for (const auto& [r, v] : m.column(k).entries()) {
        if (g[r] != target) return false;
      }
    }
    return true;
  };
  for (int a = 0; a < sd; ++a) {
    if (a >= n * (n - 1)) {
      const int h = a - n * (n - 1);
      for (std::size_t k = 0; k < dim; ++k) {
        const SparseVec expect = SparseVec::unit(k, g[k][h] - g[k][h + 1]);
        if (x[a].column(k) != expect) return "grading: " + gen_name(n, a) + " eigenvalue mismatch";
      }
    } else if (!shifted_ok(x[a], sl::weight_shift(n, a))) {
      return "grading: " + gen_name(n, a) + " does not shift weights by its root";
    }
  }
  for (int k = 0; k < n; ++k) {
    std::vector<int> e(n, 0);
    e[k] = 1;
    if (!shifted_ok(t[k], e)) return "grading: T" + std::to_string(k + 1) + " does not shift by e_k";
  }
  return std::nullopt;
}

bool is_valid(const AffMatrixRep& rep) { return !first_violation(rep).has_value(); }

std::vector<std::vector<int>> monomial_basis(int n, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  for (int d = 0; d <= l; ++d) {
    // Decreasing lex order within a degree: put as much as possible early.
    std::function<void(int, int)> go = [&](int i, int left) {
      if (i == n - 1) {
        a[i] = left;
        out.push_back(a);
        return;
      }
      for (int x = left; x >= 0; --x) {
        a[i] = x;
        go(i + 1, left - x);
      }
    };
    go(0, d);
  }
  return out;
}

AffMatrixRep model_sym_dual(int n, int l, std::size_t max_dim) {
  if (n < 1 || l < 0) throw std::invalid_argument("model_sym_dual: need n ≥ 1, l ≥ 0");
  BigInt size;
  mpz_bin_uiui(size.get_mpz_t(), n + l, l);
  if (size > BigInt(static_cast<unsigned long>(max_dim))) {
    throw ResourceLimitError("max-model-dim", "model_sym_dual(" + std::to_string(n) + "," +
                                                  std::to_string(l) + ") has dimension " +
                                                  size.get_str());
  }
  const auto basis = monomial_basis(n, l);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  const std::size_t dim = basis.size();

  std::vector<SparseMatrix> trans(n, SparseMatrix(dim, dim));
  for (int k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (basis[c][k] == 0) continue;
      auto lowered = basis[c];
      --lowered[k];
      trans[k].add_entry(index.at(lowered), c, basis[c][k]);
    }
  }
  std::vector<SparseMatrix> sl_gens;
  for (int a = 0; a < sl::dim(n); ++a) {
    SparseMatrix m(dim, dim);
    if (a < n * (n - 1)) {
      const auto e = sl::matrix(n, a);
      int i = 0;
      int j = 0;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (e[r][s]) {
            i = r;
            j = s;
          }
        }
      }
      // E_ij = -x_j ∂_i
      for (std::size_t c = 0; c < dim; ++c) {
        if (basis[c][i] == 0) continue;
        auto moved = basis[c];
        --moved[i];
        ++moved[j];
        m.add_entry(index.at(moved), c, -basis[c][i]);
      }
    } else {
      const int h = a - n * (n - 1);
      for (std::size_t c = 0; c < dim; ++c) {
        const int ev = -basis[c][h] + basis[c][h + 1];
        if (ev != 0) m.add_entry(c, c, ev);
      }
    }
    sl_gens.push_back(std::move(m));
  }
  std::vector<std::vector<int>> grading;
  for (const auto& alpha : basis) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = -alpha[i];
    grading.push_back(std::move(w));
  }
  return AffMatrixRep(n, std::move(sl_gens), std::move(trans), std::move(grading));
}

AffMatrixRep dual_model(const AffMatrixRep& rep) {
  auto flip = [](const std::vector<SparseMatrix>& gens) {
    std::vector<SparseMatrix> out;
    out.reserve(gens.size());
    for (const auto& m : gens) out.push_back(Rational(-1) * m.transpose());
    return out;
  };
  auto grading = rep.grading();
  for (auto& w : grading) {
    for (int& x : w) x = -x;
  }
  return AffMatrixRep(rep.rank(), flip(rep.sl_gens()), flip(rep.trans_gens()), std::move(grading));
}

AffMatrixRep tensor_model(const AffMatrixRep& a, const AffMatrixRep& b, std::size_t max_dim) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor_model: rank mismatch");
  if (b.dim() != 0 && a.dim() > max_dim / b.dim()) {
    throw ResourceLimitError("max-model-dim", "tensor model dimension " +
                                                  std::to_string(a.dim()) + "x" +
                                                  std::to_string(b.dim()) + " exceeds cap");
  }
  const auto ia = SparseMatrix::identity(a.dim());
  const auto ib = SparseMatrix::identity(b.dim());
  auto leibniz = [&](const std::vector<SparseMatrix>& ga, const std::vector<SparseMatrix>& gb) {
    std::vector<SparseMatrix> out;
    for (std::size_t k = 0; k < ga.size(); ++k) out.push_back(kron(ga[k], ib) + kron(ia, gb[k]));
    return out;
  };
  std::vector<std::vector<int>> grading;
  grading.reserve(a.dim() * b.dim());
  for (const auto& wa : a.grading()) {
    for (const auto& wb : b.grading()) {
      std::vector<int> w(a.rank());
      for (int i = 0; i < a.rank(); ++i) w[i] = wa[i] + wb[i];
      grading.push_back(std::move(w));
    }
  }
  return AffMatrixRep(a.rank(), leibniz(a.sl_gens(), b.sl_gens()),
                      leibniz(a.trans_gens(), b.trans_gens()), std::move(grading));
}

AffMatrixRep direct_sum_model(const std::vector<AffMatrixRep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum_model: no parts");
  const int n = parts.front().rank();
  auto gather = [&](auto member, std::size_t count) {
    std::vector<SparseMatrix> out;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<SparseMatrix> blocks;
      for (const auto& p : parts) {
        if (p.rank() != n) throw std::invalid_argument("direct_sum_model: rank mismatch");
        blocks.push_back((p.*member)()[k]);
      }
      out.push_back(linalg::direct_sum(blocks));
    }
    return out;
  };
  std::vector<std::vector<int>> grading;
  for (const auto& p : parts) grading.insert(grading.end(), p.grading().begin(), p.grading().end());
  return AffMatrixRep(n, gather(&AffMatrixRep::sl_gens, sl::dim(n)),
                      gather(&AffMatrixRep::trans_gens, n), std::move(grading));
}

AffMatrixRep sl_only_model(const Weight& w, std::size_t max_dim) {
  const auto irrep = repclass::cached_tensor_model(w, std::max<std::size_t>(max_dim, 1));
  if (irrep->dim > max_dim) {
    throw ResourceLimitError("max-model-dim", "model of " + w.to_string() + " exceeds cap");
  }
  std::vector<SparseMatrix> trans(w.rank(), SparseMatrix(irrep->dim, irrep->dim));
  return AffMatrixRep(w.rank(), irrep->sl_gens, std::move(trans), irrep->grading);
}

AffMatrixRep semisimple_model(const WeightMultiset& m, std::size_t max_dim) {
  std::vector<AffMatrixRep> parts;
  for (const auto& [w, k] : m.entries()) {
    const auto part = sl_only_model(w, max_dim);
    for (std::int64_t i = 0; i < k; ++i) parts.push_back(part);
  }
  return direct_sum_model(parts);
}

std::optional<std::vector<int>> weight_of(const AffMatrixRep& rep, const SparseVec& v) {
  if (v.empty()) return std::nullopt;
  const auto& w = rep.grading().at(v.lead());
  for (const auto& [i, a] : v.entries()) {
    if (rep.grading().at(i) != w) return std::nullopt;
  }
  return w;
}

AffMatrixRep submodel(const AffMatrixRep& rep, const std::vector<SparseVec>& generators) {
  Subspace span(rep.dim());
  std::deque<SparseVec> queue;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    if (!weight_of(rep, g)) throw std::invalid_argument("submodel: generator is not a weight vector");
    if (span.insert(g)) queue.push_back(g);
  }
  auto visit = [&](const SparseMatrix& m, const SparseVec& v) {
    SparseVec u = m.apply(v);
    if (!u.empty() && span.insert(u)) queue.push_back(std::move(u));
  };
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : rep.sl_gens()) visit(m, v);
    for (const auto& m : rep.trans_gens()) visit(m, v);
  }
  if (span.dim() == 0) throw std::invalid_argument("submodel: no nonzero generators");

  const std::size_t d = span.dim();
  auto restrict = [&](const SparseMatrix& m) {
    SparseMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const auto c = span.coordinates(m.apply(span.basis()[k]));
      std::vector<linalg::Entry> col;
      for (std::size_t r = 0; r < d; ++r) {
        if (c[r] != 0) col.emplace_back(r, c[r]);
      }
      out.set_column(k, SparseVec(std::move(col)));
    }
    return out;
  };
  std::vector<SparseMatrix> sl_gens;
  for (const auto& m : rep.sl_gens()) sl_gens.push_back(restrict(m));
  std::vector<SparseMatrix> trans;
  for (const auto& m : rep.trans_gens()) trans.push_back(restrict(m));
  std::vector<std::vector<int>> grading;
  for (const auto& b : span.basis()) grading.push_back(rep.grading()[b.lead()]);
  return AffMatrixRep(rep.rank(), std::move(sl_gens), std::move(trans), std::move(grading));
}

std::vector<SparseVec> highest_weight_vectors(const AffMatrixRep& rep,
                                              const std::vector<int>& weight) {
  const int n = rep.rank();
  std::vector<std::size_t> domain;
  for (std::size_t k = 0; k < rep.dim(); ++k) {
    if (rep.grading()[k] == weight) domain.push_back(k);
  }
  std::vector<const SparseMatrix*> raising;
  for (int i = 0; i + 1 < n; ++i) raising.push_back(&rep.sl_gens()[sl::index_of_e(n, i, i + 1)]);
  return linalg::kernel(domain, [&](std::size_t j) {
    SparseVec out;
    for (std::size_t r = 0; r < raising.size(); ++r) {
      out.axpy(1, raising[r]->column(j).shifted(r * rep.dim()));
    }
    return out;
  });
}

UnipotentImage unipotent_image(const AffMatrixRep& rep, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != rep.rank()) {
    throw std::invalid_argument("unipotent_image: vector length must equal the rank");
  }
  SparseMatrix generator(rep.dim(), rep.dim());
  for (int k = 0; k < rep.rank(); ++k) {
    if (v[k] != 0) generator = generator + v[k] * rep.trans_gens()[k];
  }
  SparseMatrix result = SparseMatrix::identity(rep.dim());
  SparseMatrix term = SparseMatrix::identity(rep.dim());
  // Terminates: the generator is nilpotent of order ≤ dim.
  for (std::size_t m = 1; m <= rep.dim(); ++m) {
    term = Rational(1, static_cast<unsigned long>(m)) * (generator * term);
    if (term.is_zero()) break;
    result = result + term;
  }
  return {v, std::move(result)};
}

std::map<std::vector<int>, SparseMatrix> translation_polynomial(const AffMatrixRep& rep) {
  const int n = rep.rank();
  std::map<std::vector<int>, SparseMatrix> powers;  // T^α, unnormalized
  std::deque<std::pair<std::vector<int>, int>> queue;  // (α, smallest index allowed next)
  powers.emplace(std::vector<int>(n, 0), SparseMatrix::identity(rep.dim()));
  queue.emplace_back(std::vector<int>(n, 0), 0);
  while (!queue.empty()) {
    auto [alpha, from] = queue.front();
    queue.pop_front();
    const SparseMatrix& base = powers.at(alpha);
    for (int k = from; k < n; ++k) {
      SparseMatrix next = rep.trans_gens()[k] * base;
      if (next.is_zero()) continue;
      auto beta = alpha;
      ++beta[k];
      powers.emplace(beta, std::move(next));
      queue.emplace_back(beta, k);
    }
  }
  std::map<std::vector<int>, SparseMatrix> out;
  for (auto& [alpha, m] : powers) {
    BigInt fact = 1;
    for (int a : alpha) {
      for (int i = 2; i <= a; ++i) fact *= i;
    }
    out.emplace(alpha, Rational(1, fact) * m);
  }
  return out;
}

DegreeBoundReport degree_bound_report(const AffMatrixRep& rep,
                                      const std::vector<linalg::Subspace>& chain) {
  DegreeBoundReport report;
  const std::size_t layers = chain.size();
  report.max_degree.assign(layers, std::vector<int>(layers, -1));

  std::vector<SparseVec> adapted;
  std::vector<std::size_t> layer_of;
  Subspace cumulative(rep.dim());
  for (std::size_t j = 0; j < layers; ++j) {
    for (const auto& b : chain[j].basis()) {
      if (cumulative.insert(b)) {
        adapted.push_back(b);
        layer_of.push_back(j);
      }
    }
  }
  if (adapted.size() != rep.dim()) {
    throw std::invalid_argument("degree_bound_report: chain does not end at the full space");
  }
  const linalg::CoordinateSolver solver(adapted);

  for (const auto& [alpha, f] : translation_polynomial(rep)) {
    const int degree = std::accumulate(alpha.begin(), alpha.end(), 0);
    for (std::size_t c = 0; c < adapted.size(); ++c) {
      const auto coords = solver.solve(f.apply(adapted[c]));
      if (!coords) throw std::logic_error("degree_bound_report: image outside the space");
      for (std::size_t r = 0; r < coords->size(); ++r) {
        if ((*coords)[r] == 0) continue;
        const std::size_t i = layer_of[r];
        const std::size_t j = layer_of[c];
        int& slot = report.max_degree[i][j];
        slot = std::max(slot, degree);
        if (degree == 0) {
          if (r != c) report.holds = false;
        } else if (i >= j || static_cast<std::size_t>(degree) > j - i) {
          report.holds = false;
        }
      }
    }
  }
  return report;
}

}  // namespace saff::matmodel
