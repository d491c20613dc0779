#include "saff/irrep_model.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

#include "saff/errors.hpp"
#include "saff/schur.hpp"
#include "saff/sl.hpp"

namespace saff::repclass {

using linalg::SparseMatrix;
using linalg::SparseVec;
using linalg::Subspace;

namespace {

// Λ^h(C^n) with basis the h-subsets of {0..n-1} (as bitmasks, ascending).
struct WedgeFactor {
  int height = 0;
  std::vector<std::uint32_t> subsets;
  std::map<std::uint32_t, std::size_t> index;
};

WedgeFactor make_factor(int n, int h) {
  WedgeFactor f;
  f.height = h;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) == h) {
      f.index.emplace(m, f.subsets.size());
      f.subsets.push_back(m);
    }
  }
  return f;
}

class ColumnWedgeSpace {
 public:
  ColumnWedgeSpace(int n, const std::vector<int>& heights, std::size_t cap) : n_(n) {
    std::map<int, std::size_t> by_height;
    std::size_t total = 1;
    for (int h : heights) {
      auto it = by_height.find(h);
      if (it == by_height.end()) {
        it = by_height.emplace(h, factors_.size()).first;
        factors_.push_back(make_factor(n, h));
      }
      column_factor_.push_back(it->second);
      const std::size_t size = factors_[it->second].subsets.size();
      if (total > cap / std::max<std::size_t>(size, 1)) {
        throw ResourceLimitError("max-model-dim",
                                 "column-wedge ambient space exceeds cap " + std::to_string(cap));
      }
      total *= size;
    }
    // Mixed radix with the last column varying fastest.
    stride_.assign(heights.size(), 1);
    for (std::size_t c = heights.size(); c-- > 1;) {
      stride_[c - 1] = stride_[c] * factors_[column_factor_[c]].subsets.size();
    }
  }

  std::size_t columns() const { return column_factor_.size(); }

  std::uint32_t subset(std::size_t index, std::size_t c) const {
    const auto& f = factors_[column_factor_[c]];
    return f.subsets[(index / stride_[c]) % f.subsets.size()];
  }

  std::size_t replace(std::size_t index, std::size_t c, std::uint32_t new_subset) const {
    const auto& f = factors_[column_factor_[c]];
    const std::size_t old = (index / stride_[c]) % f.subsets.size();
    return index + (f.index.at(new_subset) - old) * stride_[c];
  }

  std::size_t top_vector() const {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < columns(); ++c) {
      const auto& f = factors_[column_factor_[c]];
      idx += f.index.at((1u << f.height) - 1) * stride_[c];
    }
    return idx;
  }

  std::vector<int> weight(std::size_t index) const {
    std::vector<int> w(n_, 0);
    for (std::size_t c = 0; c < columns(); ++c) {
      const auto m = subset(index, c);
      for (int i = 0; i < n_; ++i) w[i] += (m >> i) & 1u;
    }
    return w;
  }

  // E_ij applied by the Leibniz rule. For i == j this is the diagonal E_ii.
  SparseVec apply_e(int i, int j, const SparseVec& v) const {
    std::map<std::size_t, Rational> acc;
    const std::uint32_t bi = 1u << i;
    const std::uint32_t bj = 1u << j;
    for (const auto& [idx, a] : v.entries()) {
      for (std::size_t c = 0; c < columns(); ++c) {
        const auto m = subset(idx, c);
        if (!(m & bj)) continue;
        if (i == j) {
          acc[idx] += a;
          continue;
        }
        if (m & bi) continue;
        // e_j is replaced by e_i in place; sorting e_i back past the members
        // strictly between i and j flips the sign once per member.
        const int lo = std::min(i, j);
        const int hi = std::max(i, j);
        const std::uint32_t between = m & (((1u << hi) - 1) & ~((1u << (lo + 1)) - 1));
        const int sign = (std::popcount(between) % 2) ? -1 : 1;
        acc[replace(idx, c, (m & ~bj) | bi)] += sign * a;
      }
    }
    std::vector<linalg::Entry> out;
    for (auto& [k, x] : acc) {
      if (x != 0) out.emplace_back(k, std::move(x));
    }
    return SparseVec(std::move(out));
  }

  SparseVec apply_basis(int n, int a, const SparseVec& v) const {
    const auto x = sl::matrix(n, a);
    if (a < n * (n - 1)) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (x[i][j] != 0) return apply_e(i, j, v);
        }
      }
    }
    const int h = a - n * (n - 1);
    return apply_e(h, h, v) - apply_e(h + 1, h + 1, v);
  }

 private:
  int n_;
  std::vector<WedgeFactor> factors_;
  std::vector<std::size_t> column_factor_;
  std::vector<std::size_t> stride_;
};

std::vector<int> column_heights(const Weight& w) {
  std::vector<int> h;
  for (int c = 0; c < w[0]; ++c) {
    int height = 0;
    while (height < w.rank() && w[height] > c) ++height;
    h.push_back(height);
  }
  return h;
}

}  // namespace

IrrepModel build_tensor_model(const Weight& w, std::size_t ambient_cap) {
  const int n = w.rank();
  IrrepModel model;
  model.weight = w;
  const auto expected = schur::weyl_dim(w);
  if (expected > BigInt(static_cast<unsigned long>(ambient_cap))) {
    throw ResourceLimitError("max-model-dim", "representation " + w.to_string() + " has dimension " +
                                                  expected.get_str() + " above the cap");
  }

  if (w.is_trivial()) {
    model.dim = 1;
    model.grading.assign(1, std::vector<int>(n, 0));
    model.sl_gens.assign(sl::dim(n), SparseMatrix(1, 1));
    return model;
  }

  const ColumnWedgeSpace space(n, column_heights(w), ambient_cap);

  // Weight spaces keyed by GL weight; std::greater gives highest weight first.
  std::map<std::vector<int>, Subspace, std::greater<>> spaces;
  std::deque<SparseVec> queue;
  const std::size_t top = space.top_vector();
  spaces.emplace(space.weight(top), Subspace(0)).first->second.insert(SparseVec::unit(top));
  queue.push_back(SparseVec::unit(top));
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i + 1 < n; ++i) {
      SparseVec u = space.apply_e(i + 1, i, v);
      if (u.empty()) continue;
      auto& s = spaces.try_emplace(space.weight(u.lead()), Subspace(0)).first->second;
      if (s.insert(u)) queue.push_back(std::move(u));
    }
  }

  std::map<std::vector<int>, std::size_t, std::greater<>> offset;
  std::size_t total = 0;
  for (const auto& [mu, s] : spaces) {
    offset[mu] = total;
    total += s.dim();
    for (std::size_t k = 0; k < s.dim(); ++k) model.grading.push_back(mu);
  }
  if (BigInt(static_cast<unsigned long>(total)) != expected) {
    throw std::logic_error("irreducible model of " + w.to_string() + " has dimension " +
                           std::to_string(total) + ", expected " + expected.get_str());
  }
  model.dim = total;

  for (int a = 0; a < sl::dim(n); ++a) {
    const auto shift = sl::weight_shift(n, a);
    SparseMatrix m(total, total);
    for (const auto& [mu, s] : spaces) {
      std::vector<int> target = mu;
      for (int i = 0; i < n; ++i) target[i] += shift[i];
      auto it = spaces.find(target);
      for (std::size_t k = 0; k < s.dim(); ++k) {
        SparseVec img = space.apply_basis(n, a, s.basis()[k]);
        if (img.empty()) continue;
        if (it == spaces.end() || !it->second.contains(img)) {
          throw std::logic_error("lowering span of " + w.to_string() + " is not sl_n-stable");
        }
        const auto coords = it->second.coordinates(img);
        std::vector<linalg::Entry> col;
        for (std::size_t r = 0; r < coords.size(); ++r) {
          if (coords[r] != 0) col.emplace_back(offset[target] + r, coords[r]);
        }
        m.set_column(offset[mu] + k, SparseVec(std::move(col)));
      }
    }
    model.sl_gens.push_back(std::move(m));
  }
  return model;
}

std::shared_ptr<const IrrepModel> cached_tensor_model(const Weight& w, std::size_t ambient_cap) {
  static std::mutex mu;
  static std::map<Weight, std::shared_ptr<const IrrepModel>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(w); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const IrrepModel>(build_tensor_model(w, ambient_cap));
  std::lock_guard lock(mu);
  return cache.emplace(w, std::move(built)).first->second;
}

}  // namespace saff::repclass
