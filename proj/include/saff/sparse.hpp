#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "saff/rational.hpp"

// Exact sparse linear algebra over Q. Vectors are sorted (index, value)
// lists without explicit zeros; matrices are stored by columns so that the
// image of a basis vector is a single lookup.
namespace saff::linalg {

using Entry = std::pair<std::size_t, Rational>;

class SparseVec {
 public:
  SparseVec() = default;
  /// Entries must be sorted by index; zeros are dropped.
  explicit SparseVec(std::vector<Entry> entries);
  static SparseVec unit(std::size_t i, Rational value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  /// Smallest index carrying a nonzero value. Requires !empty().
  std::size_t lead() const { return entries_.front().first; }
  Rational at(std::size_t i) const;

  /// this += a * x
  void axpy(const Rational& a, const SparseVec& x);
  void scale(const Rational& a);
  SparseVec shifted(std::size_t offset) const;

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);
SparseVec operator*(const Rational& a, SparseVec x);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& column(std::size_t j) const { return cols_data_[j]; }
  void set_column(std::size_t j, SparseVec v);
  void add_entry(std::size_t i, std::size_t j, const Rational& v);
  Rational at(std::size_t i, std::size_t j) const { return cols_data_[j].at(i); }
  bool is_zero() const;
  std::size_t nnz() const;

  SparseVec apply(const SparseVec& x) const;
  SparseMatrix transpose() const;
  std::vector<std::vector<Rational>> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> cols_data_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const Rational& s, const SparseMatrix& a);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);
/// Kronecker product a ⊗ b, index (i_a * rows(b) + i_b).
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
/// Block-diagonal sum.
SparseMatrix direct_sum(std::span<const SparseMatrix> blocks);

/// A subspace of Q^N kept in reduced row echelon form: every basis vector has
/// value 1 at its pivot (its lead index) and 0 at every other pivot.
/// Reduction modulo the subspace is therefore linear and single-pass.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  /// Basis sorted by pivot.
  const std::vector<SparseVec>& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;

  /// v minus its projection along the pivot coordinates.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;
  /// Adds v; returns false if it was already in the span.
  bool insert(const SparseVec& v);
  /// Coordinates of v in the RREF basis (values at the pivots). Only
  /// meaningful when contains(v).
  std::vector<Rational> coordinates(const SparseVec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::ptrdiff_t find_pivot(std::size_t index) const;

  std::size_t ambient_;
  std::vector<SparseVec> basis_;
};

/// Kernel of a linear map given column by column: image_of(j) is the image of
/// the j-th unit vector. Only the listed domain coordinates are used; the
/// kernel is computed inside their span. Elimination order follows `domain`.
std::vector<SparseVec> kernel(std::span<const std::size_t> domain,
                              const std::function<SparseVec(std::size_t)>& image_of);

/// Rank of a list of vectors.
std::size_t rank(std::span<const SparseVec> vectors, std::size_t ambient);

/// Expresses vectors in terms of an arbitrary (non-echelon) basis.
class CoordinateSolver {
 public:
  explicit CoordinateSolver(std::span<const SparseVec> basis);
  std::size_t size() const { return n_; }
  /// Coefficients c with v = Σ c_i basis_i, or nullopt if v is not in the span.
  std::optional<std::vector<Rational>> solve(const SparseVec& v) const;

 private:
  std::size_t n_ = 0;
  // Echelon rows (by lead index) with the combination of input vectors that
  // produced them.
  std::vector<std::pair<SparseVec, SparseVec>> rows_;
  std::map<std::size_t, std::size_t> by_lead_;
};

}  // namespace saff::linalg
