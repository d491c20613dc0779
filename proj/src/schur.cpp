#include "saff/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace saff::schur {

Weight normalize(int n, std::span<const int> raw) { return Weight::normalize(n, raw); }

Weight dual(const Weight& w) {
  const int n = w.rank();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = w[0] - w[n - 1 - i];
  return Weight(n, std::move(p));
}

WeightMultiset dual(const WeightMultiset& m) {
  WeightMultiset out(m.rank());
  for (const auto& [w, k] : m.entries()) out.add(dual(w), k);
  return out;
}

BigInt weyl_dim(int n, std::span<const int> gl_parts) {
  if (static_cast<int>(gl_parts.size()) != n) throw std::invalid_argument("weyl_dim: wrong length");
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= gl_parts[i] - gl_parts[j] + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

BigInt weyl_dim(const Weight& w) { return weyl_dim(w.rank(), w.parts()); }

int lambda_gap(std::span<const int> gl_parts) {
  if (gl_parts.size() < 2) return 0;
  return gl_parts[0] - gl_parts[1];
}

int lambda_gap(const Weight& w) { return lambda_gap(w.parts()); }

std::vector<std::vector<int>> pieri_gl(int n, std::span<const int> parts, int k) {
  if (k < 0) throw std::invalid_argument("pieri: negative degree");
  std::vector<int> base(parts.begin(), parts.end());
  base.resize(std::max<std::size_t>(base.size(), n), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> cur = base;
  // Row r may grow up to the old length of row r-1 (row 0 is unbounded).
  std::function<void(int, int)> go = [&](int row, int left) {
    if (row == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int cap = row == 0 ? left : std::min(left, base[row - 1] - base[row]);
    for (int x = cap; x >= 0; --x) {
      cur[row] = base[row] + x;
      go(row + 1, left - x);
    }
    cur[row] = base[row];
  };
  go(0, k);
  return out;
}

WeightMultiset pieri_sym(const Weight& w, int k) {
  WeightMultiset out(w.rank());
  for (const auto& nu : pieri_gl(w.rank(), w.parts(), k)) out.add(Weight::normalize(w.rank(), nu));
  return out;
}

namespace {

// Adds the letters of `content` one at a time, each as a horizontal strip,
// keeping the reverse reading word a lattice word. rows[r][i] counts letter i
// in row r of the skew filling.
struct LrEnumerator {
  int max_rows;
  std::vector<int> content;
  std::vector<int> shape;
  std::vector<std::vector<int>> filling;
  std::map<std::vector<int>, std::int64_t> result;

  void letter(std::size_t j) {
    if (j == content.size()) {
      std::vector<int> nu = shape;
      while (!nu.empty() && nu.back() == 0) nu.pop_back();
      ++result[nu];
      return;
    }
    const std::vector<int> old = shape;
    strip(j, 0, content[j], old, 0, 0);
  }

  // cum_j: copies of letter j placed in rows < row; cum_prev: copies of
  // letter j-1 in rows < row.
  void strip(std::size_t j, int row, int left, const std::vector<int>& old, int cum_j,
             int cum_prev) {
    if (left == 0) {
      letter(j + 1);
      return;
    }
    if (row == max_rows) return;
    int cap = row == 0 ? left : std::min(left, old[row - 1] - old[row]);
    if (j > 0) cap = std::min(cap, cum_prev - cum_j);
    for (int x = cap; x >= 0; --x) {
      shape[row] = old[row] + x;
      filling[row][j] = x;
      const int prev_here = j > 0 ? filling[row][j - 1] : 0;
      strip(j, row + 1, left - x, old, cum_j + x, cum_prev + prev_here);
    }
    shape[row] = old[row];
    filling[row][j] = 0;
  }
};

std::vector<int> trimmed(std::span<const int> p) {
  std::vector<int> v(p.begin(), p.end());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

std::map<std::vector<int>, std::int64_t> lr_gl(int n, std::span<const int> a,
                                               std::span<const int> b) {
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("lr: negative part");
  }
  for (int x : b) {
    if (x < 0) throw std::invalid_argument("lr: negative part");
  }
  LrEnumerator e;
  e.max_rows = n;
  e.content = trimmed(b);
  e.shape.assign(n, 0);
  const auto at = trimmed(a);
  if (static_cast<int>(at.size()) > n) return {};
  std::copy(at.begin(), at.end(), e.shape.begin());
  e.filling.assign(n, std::vector<int>(e.content.size(), 0));
  e.letter(0);
  std::map<std::vector<int>, std::int64_t> out;
  for (auto& [nu, c] : e.result) {
    std::vector<int> padded = nu;
    padded.resize(n, 0);
    out[padded] += c;
  }
  return out;
}

std::int64_t lr_coefficient(std::span<const int> lambda, std::span<const int> mu,
                            std::span<const int> nu) {
  auto nt = trimmed(nu);
  const int rows = static_cast<int>(std::max({nt.size(), trimmed(lambda).size(),
                                              trimmed(mu).size(), std::size_t{1}}));
  nt.resize(rows, 0);
  const auto prod = lr_gl(rows, lambda, mu);
  auto it = prod.find(nt);
  return it == prod.end() ? 0 : it->second;
}

namespace {

struct LrCache {
  std::mutex mu;
  std::map<std::pair<Weight, Weight>, WeightMultiset> table;
};

LrCache& lr_cache() {
  static LrCache cache;
  return cache;
}

}  // namespace

WeightMultiset lr_decompose(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lr_decompose: rank mismatch");
  // The product is symmetric; cache under the ordered pair.
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto& cache = lr_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  const int n = a.rank();
  WeightMultiset out(n);
  for (const auto& [nu, c] : lr_gl(n, key.first.parts(), key.second.parts())) {
    out.add(Weight::normalize(n, nu), c);
  }
  std::lock_guard lock(cache.mu);
  cache.table.emplace(key, out);
  return out;
}

WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor: rank mismatch");
  WeightMultiset out(a.rank());
  for (const auto& [wa, ma] : a.entries()) {
    for (const auto& [wb, mb] : b.entries()) {
      const auto prod = lr_decompose(wa, wb);
      for (const auto& [nu, c] : prod.entries()) out.add(nu, c * ma * mb);
    }
  }
  return out;
}

std::int64_t contains(const Weight& target, const Weight& a, const Weight& b) {
  return lr_decompose(a, b).multiplicity(target);
}

bool check_lr_gap_bound(const Weight& w, int k) {
  const int bound = k - w[0];
  for (const auto& u : pieri_gl(w.rank(), w.parts(), k)) {
    if (lambda_gap(u) < bound) return false;
  }
  return true;
}

// ---- oracle ----------------------------------------------------------------

Polynomial schur_polynomial(std::span<const int> lambda, int nvars) {
  if (nvars < 1) throw std::invalid_argument("schur_polynomial: need at least one variable");
  std::vector<int> shape(lambda.begin(), lambda.end());
  for (std::size_t i = 1; i < shape.size(); ++i) {
    if (shape[i] > shape[i - 1]) throw std::invalid_argument("schur_polynomial: not a partition");
  }
  int shift = 0;
  if (static_cast<int>(shape.size()) == nvars && !shape.empty()) {
    shift = shape.back();
    for (int& x : shape) x -= shift;
  } else if (!shape.empty() && shape.back() < 0) {
    throw std::invalid_argument("schur_polynomial: negative parts need exactly nvars entries");
  }
  while (!shape.empty() && shape.back() == 0) shape.pop_back();

  Polynomial out;
  if (static_cast<int>(shape.size()) > nvars) return out;

  // Fill row by row; each entry ≥ its left neighbour and > the entry above.
  std::vector<std::vector<int>> tab(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) tab[r].assign(shape[r], 0);
  std::vector<int> expo(nvars, shift);
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == shape.size()) {
      out[expo] += 1;
      return;
    }
    if (c == shape[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= nvars; ++v) {
      tab[r][c] = v;
      ++expo[v - 1];
      fill(r, c + 1);
      --expo[v - 1];
    }
  };
  fill(0, 0);
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial schur_oracle(const WeightMultiset& factors, int num_vars) {
  Polynomial acc;
  acc[std::vector<int>(num_vars, 0)] = 1;
  for (const auto& [w, m] : factors.entries()) {
    const auto s = schur_polynomial(w.parts(), num_vars);
    for (std::int64_t i = 0; i < m; ++i) acc = multiply(acc, s);
  }
  return acc;
}

BigInt evaluate(const Polynomial& p, std::span<const BigInt> point) {
  BigInt total = 0;
  for (const auto& [e, c] : p) {
    BigInt term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::domain_error("evaluate: Laurent monomial");
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= pw;
    }
    total += term;
  }
  return total;
}

std::map<std::vector<int>, BigInt> schur_expand(Polynomial p, int nvars) {
  std::map<std::vector<int>, BigInt> out;
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  while (!p.empty()) {
    const auto lead = p.rbegin()->first;
    const BigInt c = p.rbegin()->second;
    for (std::size_t i = 1; i < lead.size(); ++i) {
      if (lead[i] > lead[i - 1]) throw std::domain_error("schur_expand: not symmetric");
    }
    if (c < 0) throw std::domain_error("schur_expand: negative Schur coefficient");
    out[lead] += c;
    for (const auto& [e, k] : schur_polynomial(lead, nvars)) {
      auto& slot = p[e];
      slot -= c * k;
      if (slot == 0) p.erase(e);
    }
  }
  return out;
}

}  // namespace saff::schur
