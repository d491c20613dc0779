#include "saff/filtration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "saff/schur.hpp"

namespace saff::filtration {

using linalg::SparseVec;
using linalg::Subspace;

std::string to_string(Kind k) { return k == Kind::Socle ? "socle" : "radical"; }

std::vector<std::size_t> Filtration::chain_dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : chain) d.push_back(s.dim());
  return d;
}

std::vector<std::size_t> Filtration::layer_dims() const {
  std::vector<std::size_t> d;
  std::size_t prev = 0;
  for (const auto& s : chain) {
    d.push_back(s.dim() - prev);
    prev = s.dim();
  }
  return d;
}

namespace {

std::map<std::vector<int>, std::vector<std::size_t>> weight_classes(const AffMatrixRep& rep) {
  std::map<std::vector<int>, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < rep.dim(); ++k) classes[rep.grading()[k]].push_back(k);
  return classes;
}

void finish(const AffMatrixRep& rep, Filtration& f) {
  Character prev;
  for (const auto& s : f.chain) {
    Character cur = character(rep, s);
    Character layer = cur;
    for (const auto& [w, m] : prev) {
      layer[w] -= m;
      if (layer[w] == 0) layer.erase(w);
    }
    f.layer_characters.push_back(layer);
    f.layers.push_back(decompose_character(rep.rank(), layer));
    prev = std::move(cur);
  }
}

}  // namespace

Character character(const AffMatrixRep& rep, const Subspace& s) {
  Character c;
  for (const auto& b : s.basis()) ++c[rep.grading().at(b.lead())];
  return c;
}

Filtration socle_filtration(const AffMatrixRep& rep) {
  Filtration f;
  f.kind = Kind::Socle;
  const std::size_t n = rep.dim();
  const auto classes = weight_classes(rep);
  Subspace prev(n);
  while (prev.dim() < n) {
    Subspace cur(n);
    for (const auto& [w, domain] : classes) {
      const auto kern = linalg::kernel(domain, [&](std::size_t j) {
        SparseVec out;
        for (std::size_t k = 0; k < rep.trans_gens().size(); ++k) {
          out.axpy(1, prev.reduce(rep.trans_gens()[k].column(j)).shifted(k * n));
        }
        return out;
      });
      for (const auto& v : kern) cur.insert(v);
    }
    if (cur.dim() <= prev.dim()) {
      throw std::logic_error("socle filtration stalled: translations are not nilpotent");
    }
    f.chain.push_back(cur);
    prev = std::move(cur);
  }
  finish(rep, f);
  return f;
}

Filtration radical_filtration(const AffMatrixRep& rep) {
  Filtration f;
  f.kind = Kind::Radical;
  const std::size_t n = rep.dim();
  std::vector<Subspace> descending{Subspace::whole(n)};
  while (true) {
    Subspace next(n);
    for (const auto& b : descending.back().basis()) {
      for (const auto& t : rep.trans_gens()) next.insert(t.apply(b));
    }
    if (next.dim() == 0) break;
    if (next.dim() >= descending.back().dim()) {
      throw std::logic_error("radical filtration stalled: translations are not nilpotent");
    }
    descending.push_back(std::move(next));
  }
  f.chain.assign(descending.rbegin(), descending.rend());
  finish(rep, f);
  return f;
}

Filtration compute(const AffMatrixRep& rep, Kind kind) {
  return kind == Kind::Socle ? socle_filtration(rep) : radical_filtration(rep);
}

WeightMultiset decompose_character(int n, Character chr) {
  WeightMultiset out(n);
  std::erase_if(chr, [](const auto& kv) { return kv.second == 0; });
  while (!chr.empty()) {
    const auto top = chr.rbegin()->first;
    const std::int64_t mult = chr.rbegin()->second;
    if (mult < 0) throw std::domain_error("character has a negative multiplicity");
    for (std::size_t i = 1; i < top.size(); ++i) {
      if (top[i] > top[i - 1]) throw std::domain_error("leading weight is not dominant");
    }
    for (const auto& [e, k] : schur::schur_polynomial(top, n)) {
      auto& slot = chr[e];
      slot -= mult * k.get_si();
      if (slot == 0) chr.erase(e);
    }
    out.add(Weight::normalize(n, top), mult);
  }
  return out;
}

std::vector<WeightMultiset> identify_layers(const AffMatrixRep& rep, const Filtration& f) {
  Filtration copy;
  copy.kind = f.kind;
  copy.chain = f.chain;
  finish(rep, copy);
  return copy.layers;
}

bool check_duality(const AffMatrixRep& rep) {
  const auto socle = socle_filtration(rep);
  const auto radical = radical_filtration(matmodel::dual_model(rep));
  if (socle.layers.size() != radical.layers.size()) return false;
  const std::size_t l = socle.layers.size() - 1;
  for (std::size_t j = 0; j <= l; ++j) {
    if (radical.layers[l - j] != schur::dual(socle.layers[j])) return false;
  }
  return true;
}

bool check_blocks_containment(const Filtration& f) {
  if (f.layers.empty()) return true;
  const int n = f.layers.front().rank();
  for (std::size_t i = 0; i < f.layers.size(); ++i) {
    for (std::size_t j = i + 1; j < f.layers.size(); ++j) {
      const int k = static_cast<int>(j - i);
      if (f.kind == Kind::Socle) {
        const WeightMultiset sym_dual(n, {{schur::dual(Weight::sym(n, k)), 1}});
        if (!f.layers[j].is_subset_of(schur::tensor(f.layers[i], sym_dual))) return false;
      } else {
        const WeightMultiset sym(n, {{Weight::sym(n, k), 1}});
        if (!f.layers[i].is_subset_of(schur::tensor(f.layers[j], sym))) return false;
      }
    }
  }
  return true;
}

bool check_embedding_theorem(const Filtration& socle) {
  if (socle.kind != Kind::Socle) {
    throw std::invalid_argument("check_embedding_theorem needs the socle filtration");
  }
  const int n = socle.layers.front().rank();
  for (std::size_t i = 1; i < socle.layers.size(); ++i) {
    const WeightMultiset sym_dual(n, {{schur::dual(Weight::sym(n, static_cast<int>(i))), 1}});
    if (!socle.layers[i].is_subset_of(schur::tensor(socle.layers[0], sym_dual))) return false;
  }
  return true;
}

bool check_embedding_theorem(const AffMatrixRep& rep) {
  return check_embedding_theorem(socle_filtration(rep));
}

bool verify_degree_bound(const AffMatrixRep& rep, const Filtration& f) {
  return matmodel::degree_bound_report(rep, f.chain).holds;
}

std::string render(const Filtration& f) {
  std::ostringstream os;
  const char* prime = f.kind == Kind::Radical ? "'" : "";
  for (std::size_t i = 0; i < f.layers.size(); ++i) {
    if (i) os << '\n';
    os << 'Q' << i << prime << " = " << f.layers[i].to_string();
  }
  return os.str();
}

}  // namespace saff::filtration
