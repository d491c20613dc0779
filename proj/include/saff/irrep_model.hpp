#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "saff/sparse.hpp"
#include "saff/weight.hpp"

namespace saff::repclass {

/// Exact matrices for the fixed sl_n basis acting on Σ^w(C^n). Basis
/// vectors are weight vectors; grading[k] is the GL_n weight of vector k.
struct IrrepModel {
  Weight weight;
  std::size_t dim = 0;
  std::vector<linalg::SparseMatrix> sl_gens;
  std::vector<std::vector<int>> grading;
};

/// Default cap on the ambient column-wedge space Π C(n, h_c).
inline constexpr std::size_t kDefaultAmbientCap = 200000;

/// Realizes Σ^w(C^n) inside ⊗_columns Λ^{h_c}(C^n) as the span of all
/// lowering-operator words applied to the highest-weight vector
/// ⊗_c (e_1 ∧ … ∧ e_{h_c}), and returns the induced action. Basis order:
/// weight spaces by decreasing GL weight (lexicographic), then pivot order.
/// Throws ResourceLimitError("max-model-dim") past `ambient_cap`.
IrrepModel build_tensor_model(const Weight& w, std::size_t ambient_cap = kDefaultAmbientCap);

/// Memoized build_tensor_model; the returned model is shared and immutable.
std::shared_ptr<const IrrepModel> cached_tensor_model(const Weight& w,
                                                      std::size_t ambient_cap = kDefaultAmbientCap);

}  // namespace saff::repclass
