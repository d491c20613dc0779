#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "saff/rational.hpp"

namespace saff {

/// A dominant SL_n highest weight in canonical form: n non-increasing parts,
/// the last one zero. Determinant columns are stripped on construction via
/// normalize(); the constructor itself only accepts canonical input.
class Weight {
 public:
  Weight() = default;
  Weight(int n, std::vector<int> parts);

  /// Subtracts the last entry and pads with zeros to length n.
  static Weight normalize(int n, std::span<const int> raw);
  static Weight trivial(int n);
  /// The weight (k, 0, ..., 0), i.e. Sym^k(C^n).
  static Weight sym(int n, int k);
  /// The weight (1, ..., 1, 0, ..., 0) with k ones, i.e. Λ^k(C^n).
  static Weight wedge(int n, int k);

  int rank() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Number of boxes |λ|.
  int size() const;
  bool is_trivial() const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  int n_ = 0;
  std::vector<int> parts_;
};

/// Irreducible SL_n-representations with positive multiplicities.
class WeightMultiset {
 public:
  using Map = std::map<Weight, std::int64_t>;

  WeightMultiset() = default;
  explicit WeightMultiset(int n) : n_(n) {}
  WeightMultiset(int n, std::initializer_list<std::pair<Weight, std::int64_t>> entries);

  int rank() const { return n_; }
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t multiplicity(const Weight& w) const;
  /// Total number of irreducible summands counted with multiplicity.
  std::int64_t count() const;
  BigInt dimension() const;

  void add(const Weight& w, std::int64_t mult = 1);
  /// Removes mult copies; throws if fewer are present.
  void remove(const Weight& w, std::int64_t mult = 1);
  WeightMultiset& operator+=(const WeightMultiset& other);
  friend WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b) { return a += b; }
  /// Multiset containment with multiplicities.
  bool is_subset_of(const WeightMultiset& other) const;

  std::string to_string() const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
  friend std::strong_ordering operator<=>(const WeightMultiset& a, const WeightMultiset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int n_ = 0;
  Map entries_;
};

/// A completely reducible SL_n-representation, given by its summands.
class SemisimpleRep {
 public:
  SemisimpleRep() = default;
  explicit SemisimpleRep(WeightMultiset summands)
      : summands_(std::move(summands)), dim_(summands_.dimension()) {}

  int rank() const { return summands_.rank(); }
  const WeightMultiset& summands() const { return summands_; }
  const BigInt& dimension() const { return dim_; }
  std::int64_t trivial_count() const {
    return summands_.multiplicity(Weight::trivial(rank()));
  }

  friend bool operator==(const SemisimpleRep& a, const SemisimpleRep& b) {
    return a.summands_ == b.summands_;
  }

 private:
  WeightMultiset summands_;
  BigInt dim_ = 0;
};

}  // namespace saff
