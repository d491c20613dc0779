#include "saff/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace saff::linalg {

SparseVec::SparseVec(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first <= entries_[i - 1].first) {
      throw std::invalid_argument("SparseVec entries must be strictly increasing");
    }
  }
}

SparseVec SparseVec::unit(std::size_t i, Rational value) {
  SparseVec v;
  if (value != 0) v.entries_.emplace_back(i, std::move(value));
  return v;
}

Rational SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return 0;
}

void SparseVec::axpy(const Rational& a, const SparseVec& x) {
  if (a == 0 || x.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Rational& a) {
  if (a == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= a;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec out = *this;
  for (auto& e : out.entries_) e.first += offset;
  return out;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  out.axpy(1, b);
  return out;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  out.axpy(-1, b);
  return out;
}

SparseVec operator*(const Rational& a, SparseVec x) {
  x.scale(a);
  return x;
}

// ---- matrices ----------------------------------------------------------------

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cols_data_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_data_[i] = SparseVec::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  SparseMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Entry> col;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
      if (rows[i][j] != 0) col.emplace_back(i, rows[i][j]);
    }
    m.cols_data_[j] = SparseVec(std::move(col));
  }
  return m;
}

void SparseMatrix::set_column(std::size_t j, SparseVec v) {
  if (!v.empty() && v.entries().back().first >= rows_) {
    throw std::out_of_range("column entry outside matrix");
  }
  cols_data_.at(j) = std::move(v);
}

void SparseMatrix::add_entry(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix entry outside matrix");
  cols_data_[j].axpy(v, SparseVec::unit(i));
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_data_.begin(), cols_data_.end(),
                     [](const SparseVec& c) { return c.empty(); });
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.nnz();
  return n;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  // Accumulate in an ordered map: cheaper than repeated merges when x has
  // many entries.
  if (x.nnz() == 1) {
    const auto& [j, a] = x.entries().front();
    SparseVec out = cols_data_.at(j);
    out.scale(a);
    return out;
  }
  std::map<std::size_t, Rational> acc;
  for (const auto& [j, a] : x.entries()) {
    for (const auto& [i, v] : cols_data_.at(j).entries()) acc[i] += a * v;
  }
  std::vector<Entry> out;
  out.reserve(acc.size());
  for (auto& [i, v] : acc) {
    if (v != 0) out.emplace_back(i, std::move(v));
  }
  return SparseVec(std::move(out));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<Entry>> cols(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : cols_data_[j].entries()) cols[i].emplace_back(j, v);
  }
  SparseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) t.cols_data_[i] = SparseVec(std::move(cols[i]));
  return t;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_, 0));
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : cols_data_[j].entries()) d[i][j] = v;
  }
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.set_column(j, a.apply(b.column(j)));
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.set_column(j, a.column(j) + b.column(j));
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  return a + Rational(-1) * b;
}

SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.set_column(j, s * a.column(j));
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      std::vector<Entry> col;
      for (const auto& [ia, va] : a.column(ja).entries()) {
        for (const auto& [ib, vb] : b.column(jb).entries()) {
          col.emplace_back(ia * b.rows() + ib, va * vb);
        }
      }
      out.set_column(ja * b.cols() + jb, SparseVec(std::move(col)));
    }
  }
  return out;
}

SparseMatrix direct_sum(std::span<const SparseMatrix> blocks) {
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  SparseMatrix out(r, c);
  std::size_t ro = 0;
  std::size_t co = 0;
  for (const auto& b : blocks) {
    for (std::size_t j = 0; j < b.cols(); ++j) out.set_column(co + j, b.column(j).shifted(ro));
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

// ---- subspaces ---------------------------------------------------------------

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(SparseVec::unit(i));
  return s;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(basis_.size());
  for (const auto& b : basis_) p.push_back(b.lead());
  return p;
}

std::ptrdiff_t Subspace::find_pivot(std::size_t index) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), index,
                             [](const SparseVec& b, std::size_t k) { return b.lead() < k; });
  if (it != basis_.end() && it->lead() == index) return it - basis_.begin();
  return -1;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec out = v;
  for (const auto& [i, a] : v.entries()) {
    if (auto p = find_pivot(i); p >= 0) out.axpy(-a, basis_[p]);
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const SparseVec& b) { return contains(b); });
}

bool Subspace::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const std::size_t p = r.lead();
  r.scale(1 / Rational(r.entries().front().second));
  for (auto& b : basis_) {
    const Rational c = b.at(p);
    if (c != 0) b.axpy(-c, r);
  }
  auto it = std::lower_bound(basis_.begin(), basis_.end(), p,
                             [](const SparseVec& b, std::size_t k) { return b.lead() < k; });
  basis_.insert(it, std::move(r));
  return true;
}

std::vector<Rational> Subspace::coordinates(const SparseVec& v) const {
  std::vector<Rational> c(basis_.size(), 0);
  for (const auto& [i, a] : v.entries()) {
    if (auto p = find_pivot(i); p >= 0) c[p] = a;
  }
  return c;
}

std::vector<SparseVec> kernel(std::span<const std::size_t> domain,
                              const std::function<SparseVec(std::size_t)>& image_of) {
  std::map<std::size_t, std::pair<SparseVec, SparseVec>> rows;
  std::vector<SparseVec> out;
  for (std::size_t j : domain) {
    SparseVec img = image_of(j);
    SparseVec combo = SparseVec::unit(j);
    while (!img.empty()) {
      auto it = rows.find(img.lead());
      if (it == rows.end()) break;
      const Rational c = img.entries().front().second;
      img.axpy(-c, it->second.first);
      combo.axpy(-c, it->second.second);
    }
    if (img.empty()) {
      out.push_back(std::move(combo));
    } else {
      const Rational inv = 1 / Rational(img.entries().front().second);
      img.scale(inv);
      combo.scale(inv);
      const std::size_t lead = img.lead();
      rows.emplace(lead, std::make_pair(std::move(img), std::move(combo)));
    }
  }
  return out;
}

std::size_t rank(std::span<const SparseVec> vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s.dim();
}

CoordinateSolver::CoordinateSolver(std::span<const SparseVec> basis) : n_(basis.size()) {
  auto& by_lead = by_lead_;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    SparseVec img = basis[k];
    SparseVec combo = SparseVec::unit(k);
    while (!img.empty()) {
      auto it = by_lead.find(img.lead());
      if (it == by_lead.end()) break;
      const Rational c = img.entries().front().second;
      img.axpy(-c, rows_[it->second].first);
      combo.axpy(-c, rows_[it->second].second);
    }
    if (img.empty()) throw std::invalid_argument("CoordinateSolver: basis is linearly dependent");
    const Rational inv = 1 / Rational(img.entries().front().second);
    img.scale(inv);
    combo.scale(inv);
    by_lead.emplace(img.lead(), rows_.size());
    rows_.emplace_back(std::move(img), std::move(combo));
  }
}

std::optional<std::vector<Rational>> CoordinateSolver::solve(const SparseVec& v) const {
  const auto& by_lead = by_lead_;
  SparseVec rest = v;
  SparseVec acc;
  while (!rest.empty()) {
    auto it = by_lead.find(rest.lead());
    if (it == by_lead.end()) return std::nullopt;
    const Rational c = rest.entries().front().second;
    rest.axpy(-c, rows_[it->second].first);
    acc.axpy(c, rows_[it->second].second);
  }
  std::vector<Rational> out(n_, 0);
  for (const auto& [i, a] : acc.entries()) out[i] = a;
  return out;
}

}  // namespace saff::linalg
