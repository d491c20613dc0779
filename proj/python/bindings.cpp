#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "saff/acceptance.hpp"
#include "saff/catalog.hpp"
#include "saff/errors.hpp"
#include "saff/filtration.hpp"
#include "saff/json_io.hpp"
#include "saff/matmodel.hpp"
#include "saff/rationality.hpp"
#include "saff/reference_models.hpp"
#include "saff/repclass.hpp"
#include "saff/schur.hpp"

namespace py = pybind11;
using saff::io::json;

// Composite results cross the boundary as JSON text in the same encoding the
// CLI writes; the pure-Python wrapper decodes them.
namespace {

saff::repclass::StabilizerOptions stab_opts(std::uint64_t seed, int trials) {
  saff::repclass::StabilizerOptions o;
  o.seed = seed;
  o.trials = trials;
  return o;
}

saff::WeightMultiset multiset_arg(int n, const std::vector<std::vector<int>>& weights) {
  saff::WeightMultiset m(n);
  for (const auto& w : weights) m.add(saff::Weight::normalize(n, w));
  return m;
}

std::string filtrate(const std::string& model_json, const std::string& kind) {
  const auto rep = saff::io::model_from_json(json::parse(model_json));
  if (kind != "socle" && kind != "radical") throw std::invalid_argument("kind must be socle or radical");
  const auto f = saff::filtration::compute(
      rep, kind == "socle" ? saff::filtration::Kind::Socle : saff::filtration::Kind::Radical);
  saff::io::FiltrationChecks checks;
  checks.duality = saff::filtration::check_duality(rep);
  checks.blocks = saff::filtration::check_blocks_containment(f);
  checks.embedding = saff::filtration::check_embedding_theorem(rep);
  checks.degree_bound = saff::filtration::verify_degree_bound(rep, f);
  return saff::io::to_json(f, checks).dump();
}

std::string model(const std::string& which, int n, int l, const std::vector<int>& lambda,
                  std::size_t max_dim, bool sparse) {
  saff::matmodel::AffMatrixRep rep;
  if (which == "sym-dual") {
    rep = saff::matmodel::model_sym_dual(n, l, max_dim);
  } else if (which == "sl-only") {
    rep = saff::matmodel::sl_only_model(saff::Weight::normalize(n, lambda), max_dim);
  } else if (which == "dual-standard-quadric") {
    rep = saff::models::dual_standard_quadric(n);
  } else if (which == "cubic-quadric") {
    rep = saff::models::cubic_quadric(n);
  } else {
    throw std::invalid_argument("unknown model '" + which + "'");
  }
  return saff::io::to_json(rep, sparse ? saff::io::MatrixLayout::Sparse : saff::io::MatrixLayout::Dense)
      .dump();
}

}  // namespace

PYBIND11_MODULE(_saff, m) {
  m.doc() = "Native core of the saff package";

  py::register_exception<saff::ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<saff::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const json::exception& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("normalize", [](int n, const std::vector<int>& w) {
    return saff::Weight::normalize(n, w).parts();
  });
  m.def("weyl_dim", [](int n, const std::vector<int>& w) {
    return saff::schur::weyl_dim(saff::Weight::normalize(n, w)).get_str();
  });
  m.def("dual", [](int n, const std::vector<int>& w) {
    return saff::schur::dual(saff::Weight::normalize(n, w)).parts();
  });
  m.def("tensor", [](int n, const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    return saff::io::to_json(saff::schur::tensor(multiset_arg(n, a), multiset_arg(n, b))).dump();
  });
  m.def("pieri", [](int n, const std::vector<int>& w, int k) {
    return saff::io::to_json(saff::schur::pieri_sym(saff::Weight::normalize(n, w), k)).dump();
  });
  m.def(
      "classify",
      [](const std::string& rep_json, std::uint64_t seed, int trials) {
        const saff::SemisimpleRep rep(saff::io::multiset_from_json(json::parse(rep_json)));
        auto j = saff::io::to_json(saff::repclass::classify(rep, stab_opts(seed, trials)));
        j["seed"] = seed;
        return j.dump();
      },
      py::arg("rep"), py::arg("seed"), py::arg("trials"));
  m.def("model", &model, py::arg("which"), py::arg("n"), py::arg("l") = 0,
        py::arg("weight") = std::vector<int>{}, py::arg("max_dim") = saff::matmodel::kDefaultMaxModelDim,
        py::arg("sparse") = false);
  m.def("dual_model", [](const std::string& model_json) {
    return saff::io::to_json(saff::matmodel::dual_model(saff::io::model_from_json(json::parse(model_json))))
        .dump();
  });
  m.def("filtrate", &filtrate, py::arg("model"), py::arg("kind") = "socle");
  m.def(
      "check2step",
      [](const std::string& ext_json, std::uint64_t seed, int trials) {
        const auto ext = saff::io::extension_from_json(json::parse(ext_json));
        auto j = saff::io::to_json(saff::rationality::decide_rationality(ext, stab_opts(seed, trials)));
        j["seed"] = seed;
        return j.dump();
      },
      py::arg("ext"), py::arg("seed"), py::arg("trials"));
  m.def(
      "enumerate",
      [](int n, std::optional<std::int64_t> max_dim_s, std::optional<std::int64_t> max_trivials, std::uint64_t seed,
         int trials) {
        saff::catalog::CatalogConfig c;
        c.max_dim_s = max_dim_s;
        c.max_trivials = max_trivials;
        c.stabilizer = stab_opts(seed, trials);
        std::vector<std::string> lines;
        py::gil_scoped_release release;
        const auto cat = saff::catalog::enumerate_exceptional_candidates(n, c);
        lines.reserve(cat.entries.size());
        for (const auto& e : cat.entries) lines.push_back(saff::io::to_json(e).dump());
        return std::make_pair(lines, saff::catalog::render_summary(cat.summary));
      },
      py::arg("n"), py::arg("max_dim_s") = py::none(), py::arg("max_trivials") = py::none(),
      py::arg("seed"), py::arg("trials"));
  m.def("stable_level", [](int n) {
    const auto s = saff::rationality::stable_level(n);
    return std::make_pair(s.sl, s.saff);
  });
  m.def(
      "selftest",
      [](const std::vector<int>& only, std::uint64_t seed) {
        saff::acceptance::Options o;
        o.seed = seed;
        o.only.insert(only.begin(), only.end());
        std::vector<std::tuple<int, bool, std::string>> out;
        for (const auto& r : saff::acceptance::run(o, nullptr)) out.emplace_back(r.id, r.passed, r.detail);
        return out;
      },
      py::arg("only") = std::vector<int>{}, py::arg("seed"));
}
