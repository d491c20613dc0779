// saff: command-line front end for the SAff_n toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "saff/acceptance.hpp"
#include "saff/catalog.hpp"
#include "saff/errors.hpp"
#include "saff/filtration.hpp"
#include "saff/json_io.hpp"
#include "saff/rationality.hpp"
#include "saff/reference_models.hpp"
#include "saff/repclass.hpp"
#include "saff/schur.hpp"

namespace {

using saff::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitExceptional = 2;
constexpr int kExitNotFree = 3;
constexpr int kExitResource = 4;
constexpr int kExitCheckFailed = 5;

const char* kExitHelp =
    "Exit codes:\n"
    "  0  success (check2step: RationalByA or RationalByB)\n"
    "  1  parse or validation error\n"
    "  2  check2step: Exceptional\n"
    "  3  check2step: PossiblyNotGenericallyFree\n"
    "  4  a resource cap was exceeded (the cap is named in the message)\n"
    "  5  selftest or filtration check failed";

struct RunConfig {
  std::uint64_t seed = 20240611;
  int trials = 3;
  std::size_t max_model_dim = saff::matmodel::kDefaultMaxModelDim;
  std::string format = "text";
  std::string out;

  saff::repclass::StabilizerOptions stabilizer() const {
    saff::repclass::StabilizerOptions o;
    o.seed = seed;
    o.trials = trials;
    o.max_model_dim = std::max<std::size_t>(max_model_dim, saff::repclass::kDefaultAmbientCap);
    return o;
  }
  bool json() const { return format == "json"; }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open --out file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

saff::Weight inline_weight(int n, const std::string& text) {
  try {
    return saff::schur::normalize(n, saff::io::parse_int_list(text));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("weight \"" + text + "\": " + e.what());
  }
}

// Rep files are either a multiset object or any report carrying one under "rep".
saff::WeightMultiset rep_from_file(const std::string& path) {
  const auto j = read_json_file(path);
  if (j.is_object() && j.contains("rep")) return saff::io::multiset_from_json(j["rep"]);
  return saff::io::multiset_from_json(j);
}

saff::matmodel::AffMatrixRep model_from_file(const std::string& path, std::ostream& err) {
  auto rep = saff::io::model_from_json(read_json_file(path));
  if (auto v = saff::matmodel::first_violation(rep)) {
    err << "invalid model: " << *v << "\n";
    throw saff::ValidationError(*v);
  }
  return rep;
}

void emit_weight_result(const RunConfig& cfg, const std::string& key, const json& value,
                        const std::string& text) {
  Output out(cfg.out);
  if (cfg.json()) {
    out.stream() << json{{key, value}, {"seed", cfg.seed}}.dump() << "\n";
  } else {
    out.stream() << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation theory of SAff_n = SL_n ⋉ C^n: weights, filtrations, "
               "goodness and two-step rationality decisions."};
  app.footer(kExitHelp);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random points per stabilizer computation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-model-dim", cfg.max_model_dim, "Cap on constructed model dimensions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  int n = 0;
  std::string lambda, a_text, b_text;
  int k = 1;

  auto* dim = app.add_subcommand("dim", "Weyl dimension of an irreducible");
  dim->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  dim->add_option("--lambda", lambda, "Weight, e.g. 2,1,0")->required();

  auto* dual = app.add_subcommand("dual", "Dual weight");
  dual->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  dual->add_option("--lambda", lambda, "Weight")->required();

  auto* tensor = app.add_subcommand("tensor", "Decompose a tensor product of two irreducibles");
  tensor->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  tensor->add_option("--a", a_text, "First weight")->required();
  tensor->add_option("--b", b_text, "Second weight")->required();

  auto* pieri = app.add_subcommand("pieri", "Decompose Σ^λ ⊗ Sym^k");
  pieri->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  pieri->add_option("--lambda", lambda, "Weight")->required();
  pieri->add_option("--k", k, "Symmetric power")->check(CLI::NonNegativeNumber)->capture_default_str();

  std::string rep_file;
  auto* classify = app.add_subcommand("classify", "Good/bad classification of a semisimple representation");
  classify->add_option("rep", rep_file, "Representation JSON file")->required();

  std::string model_file, kind = "socle";
  auto* filtrate = app.add_subcommand("filtrate", "Socle or radical filtration of a model");
  filtrate->add_option("model", model_file, "Model JSON file")->required();
  filtrate->add_option("--kind", kind, "Filtration type")
      ->check(CLI::IsMember({"socle", "radical"}))
      ->capture_default_str();

  auto* model = app.add_subcommand("model", "Emit matrix models");
  model->require_subcommand(1);
  int l = 0;
  auto* m_sym = model->add_subcommand("sym-dual", "Affine functions of degree ≤ l, Sym^l(C^{n+1})^∨");
  m_sym->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  m_sym->add_option("--l", l, "Degree")->required()->check(CLI::NonNegativeNumber);
  auto* m_sl = model->add_subcommand("sl-only", "An irreducible with trivial translations");
  m_sl->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  m_sl->add_option("--lambda", lambda, "Weight")->required();
  std::string file_a, file_b;
  auto* m_dual = model->add_subcommand("dual", "Contragredient of a model file");
  m_dual->add_option("model", file_a, "Model JSON file")->required();
  auto* m_tensor = model->add_subcommand("tensor", "Tensor product of two model files");
  m_tensor->add_option("a", file_a, "Model JSON file")->required();
  m_tensor->add_option("b", file_b, "Model JSON file")->required();
  bool sparse = false;
  model->add_flag("--sparse", sparse, "Write matrices as [i, j, value] triples");
  std::string ref_name;
  auto* m_ref = model->add_subcommand("reference", "Mixed submodules with differing filtrations");
  m_ref->add_option("--name", ref_name, "Which model")
      ->required()
      ->check(CLI::IsMember({"dual-standard-quadric", "cubic-quadric"}));
  m_ref->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);

  std::string ext_file;
  auto* check2 = app.add_subcommand("check2step", "Decide rationality criteria for a two-step extension");
  check2->add_option("ext", ext_file, "Extension JSON file")->required();

  std::optional<std::int64_t> max_dim_s, max_trivials;
  auto* enumerate = app.add_subcommand("enumerate", "Catalog of exceptional two-step candidates");
  enumerate->add_option("--n", n, "Rank")->required()->check(CLI::Range(2, 6));
  enumerate->add_option("--max-dim-s", max_dim_s, "Bound on dim S (≤ n²+2n-1)");
  enumerate->add_option("--max-trivials", max_trivials, "Bound on trivial summands of Q (≤ n²-2)");

  auto* stable = app.add_subcommand("stable-level", "Stable rationality levels of SL_n and SAff_n");
  stable->add_option("--n", n, "Rank")->required()->check(CLI::Range(2, 1000));

  std::string only;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--only", only, "Comma-separated criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (dim->parsed()) {
      const auto w = inline_weight(n, lambda);
      const auto d = saff::schur::weyl_dim(w);
      emit_weight_result(cfg, "dim", d.get_str(), d.get_str());
    } else if (dual->parsed()) {
      const auto w = saff::schur::dual(inline_weight(n, lambda));
      emit_weight_result(cfg, "dual", saff::io::to_json(w), w.to_string());
    } else if (tensor->parsed()) {
      const auto m = saff::schur::lr_decompose(inline_weight(n, a_text), inline_weight(n, b_text));
      emit_weight_result(cfg, "rep", saff::io::to_json(m), m.to_string());
    } else if (pieri->parsed()) {
      const auto m = saff::schur::pieri_sym(inline_weight(n, lambda), k);
      emit_weight_result(cfg, "rep", saff::io::to_json(m), m.to_string());
    } else if (classify->parsed()) {
      const saff::SemisimpleRep rep(rep_from_file(rep_file));
      const auto r = saff::repclass::classify(rep, cfg.stabilizer());
      Output out(cfg.out);
      if (cfg.json()) {
        auto j = saff::io::to_json(r);
        j["rep"] = saff::io::to_json(rep.summands());
        j["seed"] = cfg.seed;
        out.stream() << j.dump() << "\n";
      } else {
        out.stream() << saff::repclass::to_string(r.verdict) << "\n";
        if (r.stabilizer) {
          out.stream() << "stab_dim " << r.stabilizer->stab_dim << " (trials " << r.stabilizer->trials
                       << ", seed " << r.stabilizer->seed << ")\n";
        } else if (r.off_list_witness) {
          out.stream() << "off-list summand " << r.off_list_witness->to_string() << "\n";
        }
      }
    } else if (filtrate->parsed()) {
      const auto rep = model_from_file(model_file, std::cerr);
      const auto f = saff::filtration::compute(
          rep, kind == "socle" ? saff::filtration::Kind::Socle : saff::filtration::Kind::Radical);
      saff::io::FiltrationChecks checks;
      checks.duality = saff::filtration::check_duality(rep);
      checks.blocks = saff::filtration::check_blocks_containment(f);
      checks.embedding = saff::filtration::check_embedding_theorem(rep);
      checks.degree_bound = saff::filtration::verify_degree_bound(rep, f);
      Output out(cfg.out);
      if (cfg.json()) {
        auto j = saff::io::to_json(f, checks);
        j["seed"] = cfg.seed;
        out.stream() << j.dump() << "\n";
      } else {
        out.stream() << std::boolalpha << saff::filtration::render(f) << "\n"
                     << "duality " << checks.duality << "\nblocks_containment " << checks.blocks
                     << "\nembedding " << checks.embedding << "\ndegree_bound " << checks.degree_bound
                     << "\n";
      }
      if (!(checks.duality && checks.blocks && checks.embedding && checks.degree_bound)) {
        return kExitCheckFailed;
      }
    } else if (model->parsed()) {
      saff::matmodel::AffMatrixRep rep;
      if (m_sym->parsed()) {
        rep = saff::matmodel::model_sym_dual(n, l, cfg.max_model_dim);
      } else if (m_sl->parsed()) {
        rep = saff::matmodel::sl_only_model(inline_weight(n, lambda), cfg.max_model_dim);
      } else if (m_dual->parsed()) {
        rep = saff::matmodel::dual_model(model_from_file(file_a, std::cerr));
      } else if (m_tensor->parsed()) {
        rep = saff::matmodel::tensor_model(model_from_file(file_a, std::cerr),
                                           model_from_file(file_b, std::cerr), cfg.max_model_dim);
      } else {
        rep = ref_name == "cubic-quadric" ? saff::models::cubic_quadric(n)
                                          : saff::models::dual_standard_quadric(n);
      }
      Output out(cfg.out);
      out.stream() << saff::io::to_json(rep, sparse ? saff::io::MatrixLayout::Sparse
                                                     : saff::io::MatrixLayout::Dense)
                          .dump()
                   << "\n";
    } else if (check2->parsed()) {
      const auto ext = saff::io::extension_from_json(read_json_file(ext_file));
      const auto v = saff::rationality::decide_rationality(ext, cfg.stabilizer());
      Output out(cfg.out);
      if (cfg.json()) {
        auto j = saff::io::to_json(v);
        j["seed"] = cfg.seed;
        out.stream() << j.dump() << "\n";
      } else {
        out.stream() << saff::rationality::to_string(v.outcome) << "\n";
        if (v.witness) {
          out.stream() << "W1 = " << v.witness->W1.to_string() << "\nW2 = " << v.witness->W2.to_string()
                       << "\n";
        }
        for (const auto& e : v.evidence) {
          out.stream() << (e.result ? "  [yes] " : "  [no]  ") << e.condition << ": " << e.clause;
          if (!e.detail.empty()) out.stream() << " (" << e.detail << ")";
          out.stream() << "\n";
        }
        out.stream() << "seed " << cfg.seed << "\n";
      }
      switch (v.outcome) {
        case saff::rationality::Outcome::Exceptional: return kExitExceptional;
        case saff::rationality::Outcome::PossiblyNotGenericallyFree: return kExitNotFree;
        default: return kExitOk;
      }
    } else if (enumerate->parsed()) {
      saff::catalog::CatalogConfig c;
      c.max_dim_s = max_dim_s;
      c.max_trivials = max_trivials;
      c.stabilizer = cfg.stabilizer();
      const auto catalog = saff::catalog::enumerate_exceptional_candidates(n, c);
      Output out(cfg.out);
      for (const auto& e : catalog.entries) out.stream() << saff::io::to_json(e).dump() << "\n";
      out.stream() << saff::catalog::render_summary(catalog.summary) << "# seed " << cfg.seed << "\n";
    } else if (stable->parsed()) {
      const auto s = saff::rationality::stable_level(n);
      emit_weight_result(cfg, "stable_level", json{{"SL", s.sl}, {"SAff", s.saff}},
                         "SL " + std::to_string(s.sl) + "\nSAff " + std::to_string(s.saff));
    } else if (selftest->parsed()) {
      saff::acceptance::Options o;
      o.seed = cfg.seed;
      if (!only.empty()) {
        for (int id : saff::io::parse_int_list(only)) o.only.insert(id);
      }
      const auto results = saff::acceptance::run(o, &std::cout);
      for (const auto& r : results) {
        if (!r.passed) return kExitCheckFailed;
      }
    }
  } catch (const saff::ResourceLimitError& e) {
    std::cerr << "resource cap " << e.cap() << " exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const saff::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
