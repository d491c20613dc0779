#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saff/sparse.hpp"
#include "saff/weight.hpp"

namespace saff::matmodel {

using linalg::SparseMatrix;
using linalg::SparseVec;

/// Default cap on the dimension N of any constructed model.
inline constexpr std::size_t kDefaultMaxModelDim = 20000;

/// An SAff_n-representation given by the action of the Lie algebra
/// sl_n ⋉ C^n: matrices for the fixed sl_n basis (see sl.hpp), n commuting
/// nilpotent translation generators T_1..T_n, and the GL_n weight of every
/// basis vector. Immutable once built.
///
/// Sign convention: on functions, translation by v acts as f ↦ f(· + v), so
/// T_k = ∂/∂x_k and E_ij = -x_j ∂/∂x_i. With these, [E_ij, T_k] = δ_jk T_i.
class AffMatrixRep {
 public:
  AffMatrixRep() = default;
  AffMatrixRep(int n, std::vector<SparseMatrix> sl_gens, std::vector<SparseMatrix> trans_gens,
               std::vector<std::vector<int>> grading);

  int rank() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<SparseMatrix>& sl_gens() const { return sl_gens_; }
  const std::vector<SparseMatrix>& trans_gens() const { return trans_gens_; }
  const std::vector<std::vector<int>>& grading() const { return grading_; }

  friend bool operator==(const AffMatrixRep&, const AffMatrixRep&) = default;

 private:
  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> sl_gens_;
  std::vector<SparseMatrix> trans_gens_;
  std::vector<std::vector<int>> grading_;
};

/// Runs the full relation suite (sl_n brackets, [X, T_k] = T_{X e_k},
/// commuting nilpotent translations, weight grading). Returns a description
/// of the first failure, or nullopt if all relations hold exactly.
std::optional<std::string> first_violation(const AffMatrixRep& rep);
bool is_valid(const AffMatrixRep& rep);

/// Affine functions of degree ≤ l on C^n, i.e. Sym^l(C^{n+1})^∨ restricted
/// to SAff_n. Basis: monomials x^α by total degree, then α in decreasing
/// lexicographic order (so 1, x1, ..., xn, x1², x1x2, ...).
AffMatrixRep model_sym_dual(int n, int l, std::size_t max_dim = kDefaultMaxModelDim);
/// Exponent vectors of the model_sym_dual basis, in basis order.
std::vector<std::vector<int>> monomial_basis(int n, int l);

/// Contragredient: every generator becomes its negated transpose.
AffMatrixRep dual_model(const AffMatrixRep& rep);
/// Leibniz action on a ⊗ b, basis index i_a * dim(b) + i_b.
AffMatrixRep tensor_model(const AffMatrixRep& a, const AffMatrixRep& b,
                          std::size_t max_dim = kDefaultMaxModelDim);
AffMatrixRep direct_sum_model(const std::vector<AffMatrixRep>& parts);
/// Σ^w(C^n) with all translations acting by zero.
AffMatrixRep sl_only_model(const Weight& w, std::size_t max_dim = kDefaultMaxModelDim);
/// Direct sum of sl_only models of all summands.
AffMatrixRep semisimple_model(const WeightMultiset& m, std::size_t max_dim = kDefaultMaxModelDim);

/// Subrepresentation generated by weight vectors `generators`, restricted to
/// its own RREF basis (ordered by pivot). Throws if a generator is not
/// homogeneous for the grading.
AffMatrixRep submodel(const AffMatrixRep& rep, const std::vector<SparseVec>& generators);

/// Basis of the vectors of GL weight `weight` killed by every raising
/// operator E_{i,i+1}.
std::vector<SparseVec> highest_weight_vectors(const AffMatrixRep& rep, const std::vector<int>& weight);

/// GL weight of a homogeneous vector, or nullopt if v mixes weights.
std::optional<std::vector<int>> weight_of(const AffMatrixRep& rep, const SparseVec& v);

/// ρ(v) = exp(Σ v_i T_i) as an exact matrix.
struct UnipotentImage {
  std::vector<Rational> v;
  SparseMatrix matrix;
};
UnipotentImage unipotent_image(const AffMatrixRep& rep, const std::vector<Rational>& v);

/// Coefficients F_α of ρ(v) = Σ_α F_α v^α, i.e. F_α = T^α / α!, for every
/// α with F_α ≠ 0 (keys are multi-indices).
std::map<std::vector<int>, SparseMatrix> translation_polynomial(const AffMatrixRep& rep);

/// Expands ρ(v) symbolically in a basis adapted to `chain` (0 ⊂ V_0 ⊂ … ⊂ V_l
/// = V) and checks that the (i, j) block is zero for i > j, the identity for
/// i = j, and a polynomial of total degree ≤ j - i for i < j.
struct DegreeBoundReport {
  bool holds = true;
  /// max_degree[i][j]: largest |α| with a nonzero (i, j) block of F_α, or -1.
  std::vector<std::vector<int>> max_degree;
};
DegreeBoundReport degree_bound_report(const AffMatrixRep& rep,
                                      const std::vector<linalg::Subspace>& chain);

}  // namespace saff::matmodel
