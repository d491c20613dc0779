#pragma once

#include <utility>
#include <vector>

#include "saff/rational.hpp"

// The fixed basis of sl_n used by every matrix model: the off-diagonal
// elementary matrices E_ij in lexicographic (i, j) order, followed by the
// Cartan differences H_i = E_ii - E_{i+1,i+1}, i = 0..n-2.
namespace saff::sl {

int dim(int n);
int index_of_e(int n, int i, int j);
int index_of_h(int n, int i);

/// The basis element as an n×n integer matrix.
std::vector<std::vector<int>> matrix(int n, int a);

/// Coordinates of a traceless n×n matrix in the basis; throws if the trace
/// is nonzero.
std::vector<Rational> coordinates(const std::vector<std::vector<Rational>>& x);

/// Structure constants: coordinates of [X_a, X_b].
std::vector<Rational> bracket(int n, int a, int b);

/// Root shift of X_a on GL weights: e_i - e_j for E_ij, zero for H_i.
std::vector<int> weight_shift(int n, int a);

}  // namespace saff::sl
