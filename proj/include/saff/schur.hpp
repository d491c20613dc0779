#pragma once

#include <map>
#include <vector>

#include "saff/rational.hpp"
#include "saff/weight.hpp"

// Partition arithmetic for SL_n/GL_n: Weyl dimensions, duals, Pieri and
// Littlewood-Richardson decompositions, and a monomial-expansion oracle.
namespace saff::schur {

Weight normalize(int n, std::span<const int> raw);

/// (λ1-λn, λ1-λ(n-1), ..., 0).
Weight dual(const Weight& w);
WeightMultiset dual(const WeightMultiset& m);

/// Weyl dimension ∏_{i<j} (λi-λj+j-i)/(j-i), exact.
BigInt weyl_dim(const Weight& w);
BigInt weyl_dim(int n, std::span<const int> gl_parts);

/// λ1 - λ2 (0 for n = 1).
int lambda_gap(const Weight& w);
int lambda_gap(std::span<const int> gl_parts);

/// GL_n-level Pieri rule: all partitions with at most n rows obtained from
/// `parts` by adding a horizontal strip of k boxes. Labels are not normalized.
std::vector<std::vector<int>> pieri_gl(int n, std::span<const int> parts, int k);

/// Σ^w ⊗ Sym^k(C^n), normalized.
WeightMultiset pieri_sym(const Weight& w, int k);

/// GL_n-level Littlewood-Richardson product, labels not normalized. Results
/// with more than n rows are dropped.
std::map<std::vector<int>, std::int64_t> lr_gl(int n, std::span<const int> a,
                                               std::span<const int> b);
/// Single coefficient c^ν_{λμ} by LR-tableau enumeration.
std::int64_t lr_coefficient(std::span<const int> lambda, std::span<const int> mu,
                            std::span<const int> nu);

/// Full SL_n tensor product decomposition.
WeightMultiset lr_decompose(const Weight& a, const Weight& b);
/// Product of two semisimple representations, summand by summand.
WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b);

/// Multiplicity of target in a ⊗ b.
std::int64_t contains(const Weight& target, const Weight& a, const Weight& b);

/// True iff every GL-level summand U of Σ^w ⊗ Sym^k satisfies
/// λ1(U) - λ2(U) ≥ k - λ1(w).
bool check_lr_gap_bound(const Weight& w, int k);

// ---- monomial oracle -------------------------------------------------------

/// Integer polynomial in a fixed number of variables, keyed by exponent vector.
using Polynomial = std::map<std::vector<int>, BigInt>;

/// Schur polynomial s_λ(x1..x_nvars) expanded over semistandard tableaux.
/// Entries of `lambda` may be negative; the result is then a Laurent
/// polynomial (det^{λn} · s_{λ - λn}).
Polynomial schur_polynomial(std::span<const int> lambda, int nvars);

/// Product of Schur polynomials of all entries (with multiplicity), in
/// num_vars variables.
Polynomial schur_oracle(const WeightMultiset& factors, int num_vars);

Polynomial multiply(const Polynomial& a, const Polynomial& b);
BigInt evaluate(const Polynomial& p, std::span<const BigInt> point);

/// Expands a symmetric polynomial in the Schur basis by repeatedly peeling
/// the lexicographically leading monomial. Throws std::domain_error if a
/// negative coefficient appears (the input was not a Schur-positive symmetric
/// polynomial).
std::map<std::vector<int>, BigInt> schur_expand(Polynomial p, int nvars);

}  // namespace saff::schur
