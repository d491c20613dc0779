#include "saff/weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "saff/schur.hpp"

namespace saff {

Weight::Weight(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(parts_.size()) != n) {
    throw std::invalid_argument("weight " + to_string() + " does not have " +
                                std::to_string(n) + " parts");
  }
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("weight " + to_string() + " is not non-increasing");
    }
  }
  if (parts_.back() != 0) {
    throw std::invalid_argument("weight " + to_string() + " is not normalized (last part must be 0)");
  }
}

Weight Weight::normalize(int n, std::span<const int> raw) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(raw.size()) > n) {
    throw std::invalid_argument("weight has more than " + std::to_string(n) + " parts");
  }
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i] > raw[i - 1]) throw std::invalid_argument("weight is not non-increasing");
  }
  // Missing trailing entries are zeros, so they take part in the shift.
  int last = raw.empty() ? 0 : raw.back();
  if (static_cast<int>(raw.size()) < n) {
    if (last < 0) throw std::invalid_argument("weight is not non-increasing");
    last = 0;
  }
  std::vector<int> parts(n, 0);
  for (std::size_t i = 0; i < raw.size(); ++i) parts[i] = raw[i] - last;
  return Weight(n, std::move(parts));
}

Weight Weight::trivial(int n) { return Weight(n, std::vector<int>(n, 0)); }

Weight Weight::sym(int n, int k) {
  std::vector<int> p(n, 0);
  if (n > 1) p[0] = k;
  return Weight(n, std::move(p));
}

Weight Weight::wedge(int n, int k) {
  std::vector<int> p(n, 0);
  for (int i = 0; i < k; ++i) p[i] = 1;
  return normalize(n, p);
}

int Weight::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Weight::is_trivial() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

WeightMultiset::WeightMultiset(int n,
                               std::initializer_list<std::pair<Weight, std::int64_t>> entries)
    : n_(n) {
  for (const auto& [w, m] : entries) add(w, m);
}

std::int64_t WeightMultiset::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightMultiset::count() const {
  std::int64_t c = 0;
  for (const auto& [w, m] : entries_) c += m;
  return c;
}

BigInt WeightMultiset::dimension() const {
  BigInt d = 0;
  for (const auto& [w, m] : entries_) d += schur::weyl_dim(w) * BigInt(static_cast<long>(m));
  return d;
}

void WeightMultiset::add(const Weight& w, std::int64_t mult) {
  if (w.rank() != n_) {
    throw std::invalid_argument("weight " + w.to_string() + " has rank " +
                                std::to_string(w.rank()) + ", expected " + std::to_string(n_));
  }
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  if (mult == 0) return;
  entries_[w] += mult;
}

void WeightMultiset::remove(const Weight& w, std::int64_t mult) {
  auto it = entries_.find(w);
  if (it == entries_.end() || it->second < mult) {
    throw std::invalid_argument("cannot remove " + std::to_string(mult) + " copies of " +
                                w.to_string());
  }
  it->second -= mult;
  if (it->second == 0) entries_.erase(it);
}

WeightMultiset& WeightMultiset::operator+=(const WeightMultiset& other) {
  if (other.n_ != n_ && !other.empty()) {
    if (empty() && n_ == 0) {
      n_ = other.n_;
    } else {
      throw std::invalid_argument("rank mismatch in multiset sum");
    }
  }
  for (const auto& [w, m] : other.entries_) add(w, m);
  return *this;
}

bool WeightMultiset::is_subset_of(const WeightMultiset& other) const {
  for (const auto& [w, m] : entries_) {
    if (other.multiplicity(w) < m) return false;
  }
  return true;
}

std::string WeightMultiset::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Largest labels first reads more naturally: [2,0,0] + [1,1,0].
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != 1) os << it->second << '*';
    os << it->first.to_string();
  }
  return os.str();
}

}  // namespace saff
