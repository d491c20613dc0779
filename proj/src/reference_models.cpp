#include "saff/reference_models.hpp"

#include <stdexcept>

#include "saff/schur.hpp"

namespace saff::models {

using matmodel::AffMatrixRep;

namespace {

// GL weight of the highest weight vector of Σ^λ(C^n)^∨: (-λ_n, ..., -λ_1).
std::vector<int> dual_highest(int n, std::vector<int> lambda) {
  lambda.resize(n, 0);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = -lambda[n - 1 - i];
  return out;
}

AffMatrixRep dual_irrep(int n, std::vector<int> lambda) {
  lambda.resize(n, 0);
  return matmodel::dual_model(matmodel::sl_only_model(Weight::normalize(n, lambda)));
}

linalg::SparseVec only_vector(const AffMatrixRep& rep, const std::vector<int>& weight) {
  auto v = matmodel::highest_weight_vectors(rep, weight);
  if (v.empty()) throw std::logic_error("reference model: missing highest weight vector");
  return models::generic_combination(v);
}

}  // namespace

linalg::SparseVec generic_combination(const std::vector<linalg::SparseVec>& vectors) {
  linalg::SparseVec out;
  for (std::size_t i = 0; i < vectors.size(); ++i) out.axpy(Rational(static_cast<long>(i + 1)), vectors[i]);
  return out;
}

AffMatrixRep dual_standard_quadric(int n) {
  if (n < 3) throw std::invalid_argument("dual_standard_quadric: need n ≥ 3");
  const auto ambient = matmodel::tensor_model(dual_irrep(n, {1}), matmodel::model_sym_dual(n, 2));
  return matmodel::submodel(ambient, {only_vector(ambient, dual_highest(n, {3})),
                                      only_vector(ambient, dual_highest(n, {1, 1}))});
}

AffMatrixRep cubic_quadric(int n) {
  if (n < 4) throw std::invalid_argument("cubic_quadric: need n ≥ 4");
  const auto base = matmodel::direct_sum_model(
      {dual_irrep(n, {3}), dual_irrep(n, {2, 1}), dual_irrep(n, {1, 1, 1})});
  const auto ambient = matmodel::tensor_model(base, matmodel::model_sym_dual(n, 2));
  return matmodel::submodel(ambient, {only_vector(ambient, dual_highest(n, {5})),
                                      only_vector(ambient, dual_highest(n, {3, 1})),
                                      only_vector(ambient, dual_highest(n, {2, 1, 1}))});
}

}  // namespace saff::models
