#pragma once

#include <map>
#include <string>
#include <vector>

#include "saff/matmodel.hpp"
#include "saff/sparse.hpp"
#include "saff/weight.hpp"

namespace saff::filtration {

using matmodel::AffMatrixRep;

enum class Kind { Socle, Radical };
std::string to_string(Kind k);

/// GL_n character: weight -> multiplicity.
using Character = std::map<std::vector<int>, std::int64_t>;

/// A chain 0 ⊂ V_0 ⊂ … ⊂ V_l = V of subrepresentations whose successive
/// quotients are completely reducible, with those quotients identified.
///
/// Socle: V_0 is the common kernel of the translations and V_i is the
/// preimage of the common kernel on V/V_{i-1}. Completely reducible SAff_n
/// modules are exactly the ones where U = C^n acts trivially, and the U-fixed
/// vectors form a subrepresentation because U is normal.
///
/// Radical: V'_{l-1} = Σ_k T_k V, V'_{l-j-1} = Σ_k T_k V'_{l-j}, down to 0.
struct Filtration {
  Kind kind = Kind::Socle;
  std::vector<linalg::Subspace> chain;
  std::vector<Character> layer_characters;
  std::vector<WeightMultiset> layers;

  /// Number of layers (a two-step extension has length 2).
  std::size_t length() const { return chain.size(); }
  std::vector<std::size_t> chain_dims() const;
  std::vector<std::size_t> layer_dims() const;
};

Filtration socle_filtration(const AffMatrixRep& rep);
Filtration radical_filtration(const AffMatrixRep& rep);
Filtration compute(const AffMatrixRep& rep, Kind kind);

/// Character of the subspace (requires a homogeneous basis).
Character character(const AffMatrixRep& rep, const linalg::Subspace& s);

/// Splits a GL character into irreducibles by peeling the lexicographically
/// highest weight. Throws std::domain_error if a multiplicity goes negative.
WeightMultiset decompose_character(int n, Character chr);

/// Recomputes the layers of `f` from its chain.
std::vector<WeightMultiset> identify_layers(const AffMatrixRep& rep, const Filtration& f);

/// Radical layers of the dual are the duals of the socle layers, reversed.
bool check_duality(const AffMatrixRep& rep);
/// Socle: Q_j ⊂ Q_i ⊗ Sym^{j-i}(C^n)^∨ for j > i.
/// Radical: Q'_i ⊂ Q'_j ⊗ Sym^{j-i}(C^n) for i < j.
bool check_blocks_containment(const Filtration& f);
/// Every socle layer Q_i embeds in Q_0 ⊗ Sym^i(C^n)^∨.
bool check_embedding_theorem(const AffMatrixRep& rep);
bool check_embedding_theorem(const Filtration& socle);
/// N_ij(v) has total degree ≤ j - i in the basis adapted to f.
bool verify_degree_bound(const AffMatrixRep& rep, const Filtration& f);

/// Q-list rendering, e.g. "Q0 = [1,1,0]\nQ1 = [2,2,0]".
std::string render(const Filtration& f);

}  // namespace saff::filtration
