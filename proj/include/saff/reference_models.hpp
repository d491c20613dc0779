#pragma once

#include "saff/matmodel.hpp"

// Two indecomposable submodules of (semisimple) ⊗ Sym²(C^{n+1})^∨ whose
// socle and radical filtrations differ. Both are generated by highest weight
// vectors of the top layer.
namespace saff::models {

/// Inside (C^n)^∨ ⊗ Sym²(C^{n+1})^∨, generated by the highest weight vectors
/// of Sym³(C^n)^∨ and Λ²(C^n)^∨ in the quadratic part. n ≥ 3.
matmodel::AffMatrixRep dual_standard_quadric(int n);

/// Inside (Sym³ ⊕ Σ^{2,1} ⊕ Λ³)(C^n)^∨ ⊗ Sym²(C^{n+1})^∨, generated by the
/// highest weight vectors of Sym⁵(C^n)^∨ and of generic combinations for
/// Σ^{3,1}(C^n)^∨ and Σ^{2,1,1}(C^n)^∨. n ≥ 4.
matmodel::AffMatrixRep cubic_quadric(int n);

/// Σ c_i v_i with c_i = i + 1: a fixed combination that avoids every proper
/// coordinate subspace.
linalg::SparseVec generic_combination(const std::vector<linalg::SparseVec>& vectors);

}  // namespace saff::models
