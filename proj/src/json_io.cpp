#include "saff/json_io.hpp"

#include <stdexcept>

#include "saff/schur.hpp"

namespace saff::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object containing \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_of(const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + ": expected an integer, got " + j.dump());
  return j.get<int>();
}

Rational rational_of(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("matrix entry: expected integer or \"p/q\" string, got " + j.dump());
}

json matrix_json(const linalg::SparseMatrix& m, MatrixLayout layout) {
  if (layout == MatrixLayout::Dense) {
    json rows = json::array();
    for (const auto& row : m.to_dense()) {
      json r = json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      rows.push_back(std::move(r));
    }
    return rows;
  }
  json entries = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c).entries()) entries.push_back({r, c, to_string(v)});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

linalg::SparseMatrix matrix_from_json(const json& j, std::size_t dim, const std::string& what) {
  if (j.is_array()) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) fail(what + ": dense matrix rows must be arrays");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(rational_of(x));
      if (r.size() != dim) fail(what + ": row length " + std::to_string(r.size()) + " != N");
      rows.push_back(std::move(r));
    }
    if (rows.size() != dim) fail(what + ": expected " + std::to_string(dim) + " rows");
    return linalg::SparseMatrix::from_dense(rows);
  }
  const auto rows = field(j, "rows").get<std::size_t>();
  const auto cols = field(j, "cols").get<std::size_t>();
  if (rows != dim || cols != dim) fail(what + ": shape does not match N = " + std::to_string(dim));
  linalg::SparseMatrix m(rows, cols);
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) fail(what + ": entries must be [i, j, value] triples");
    const auto r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
    if (r >= rows || c >= cols) fail(what + ": entry index out of range");
    m.add_entry(r, c, rational_of(e[2]));
  }
  return m;
}

}  // namespace

json to_json(const Weight& w) { return w.parts(); }

Weight weight_from_json(const json& j, int n) {
  if (!j.is_array()) fail("weight: expected an integer array, got " + j.dump());
  std::vector<int> raw;
  for (const auto& x : j) raw.push_back(int_of(x, "weight entry"));
  return schur::normalize(n, raw);
}

json to_json(const WeightMultiset& m) {
  json summands = json::array();
  // Largest summand first, matching to_string.
  for (auto it = m.entries().rbegin(); it != m.entries().rend(); ++it) {
    summands.push_back({{"lambda", to_json(it->first)}, {"mult", it->second}});
  }
  return {{"n", m.rank()}, {"summands", summands}};
}

WeightMultiset multiset_from_json(const json& j) {
  return multiset_from_json(j, int_of(field(j, "n"), "n"));
}

WeightMultiset multiset_from_json(const json& j, int n) {
  if (j.is_object() && j.contains("n") && int_of(j["n"], "n") != n) {
    fail("rank mismatch: n = " + j["n"].dump() + ", expected " + std::to_string(n));
  }
  const json& list = j.is_array() ? j : field(j, "summands");
  if (!list.is_array()) fail("summands: expected an array");
  WeightMultiset out(n);
  for (const auto& s : list) {
    // Bare arrays stand for one copy.
    if (s.is_array()) {
      out.add(weight_from_json(s, n));
      continue;
    }
    const std::int64_t mult = s.contains("mult") ? s["mult"].get<std::int64_t>() : 1;
    if (mult < 1) fail("mult must be positive, got " + std::to_string(mult));
    out.add(weight_from_json(field(s, "lambda"), n), mult);
  }
  return out;
}

json to_json(const repclass::StabilizerReport& r) {
  return {{"stab_dim", r.stab_dim}, {"trials", r.trials}, {"seed", r.seed}};
}

json to_json(const repclass::ClassifyResult& r) {
  json j = {{"verdict", repclass::to_string(r.verdict)},
            {"list_authoritative", r.list_authoritative}};
  j["stabilizer"] = r.stabilizer ? to_json(*r.stabilizer) : json(nullptr);
  j["off_list_witness"] = r.off_list_witness ? to_json(*r.off_list_witness) : json(nullptr);
  return j;
}

json to_json(const matmodel::AffMatrixRep& rep, MatrixLayout layout) {
  json sl = json::array(), tr = json::array();
  for (const auto& m : rep.sl_gens()) sl.push_back(matrix_json(m, layout));
  for (const auto& m : rep.trans_gens()) tr.push_back(matrix_json(m, layout));
  return {{"n", rep.rank()}, {"N", rep.dim()}, {"sl", sl}, {"translations", tr},
          {"grading", rep.grading()}};
}

matmodel::AffMatrixRep model_from_json(const json& j) {
  const int n = int_of(field(j, "n"), "n");
  const auto dim = field(j, "N").get<std::size_t>();
  std::vector<linalg::SparseMatrix> sl, tr;
  std::size_t k = 0;
  for (const auto& m : field(j, "sl")) sl.push_back(matrix_from_json(m, dim, "sl[" + std::to_string(k++) + "]"));
  k = 0;
  for (const auto& m : field(j, "translations")) {
    tr.push_back(matrix_from_json(m, dim, "translations[" + std::to_string(k++) + "]"));
  }
  auto grading = field(j, "grading").get<std::vector<std::vector<int>>>();
  return matmodel::AffMatrixRep(n, std::move(sl), std::move(tr), std::move(grading));
}

json to_json(const filtration::Filtration& f, const FiltrationChecks& checks) {
  json layers = json::array();
  for (const auto& l : f.layers) layers.push_back(to_json(l));
  return {{"kind", filtration::to_string(f.kind)},
          {"length", f.length()},
          {"chain_dims", f.chain_dims()},
          {"layer_dims", f.layer_dims()},
          {"layers", layers},
          {"checks",
           {{"duality", checks.duality},
            {"blocks_containment", checks.blocks},
            {"embedding", checks.embedding},
            {"degree_bound", checks.degree_bound}}}};
}

rationality::TwoStepExtension extension_from_json(const json& j) {
  rationality::TwoStepExtension ext;
  ext.n = int_of(field(j, "n"), "n");
  if (ext.n < 2) fail("n must be at least 2");
  ext.S = SemisimpleRep(multiset_from_json(field(j, "S"), ext.n));
  ext.Q = SemisimpleRep(multiset_from_json(field(j, "Q"), ext.n));
  ext.W = SemisimpleRep(j.contains("W") ? multiset_from_json(j["W"], ext.n) : WeightMultiset(ext.n));
  if (j.contains("assume_generically_free") && !j["assume_generically_free"].is_null()) {
    ext.assume_generically_free = j["assume_generically_free"].get<bool>();
  }
  return ext;
}

json to_json(const rationality::TwoStepExtension& ext) {
  json j = {{"n", ext.n},
            {"S", to_json(ext.S.summands())},
            {"Q", to_json(ext.Q.summands())},
            {"W", to_json(ext.W.summands())}};
  j["assume_generically_free"] =
      ext.assume_generically_free ? json(*ext.assume_generically_free) : json(nullptr);
  return j;
}

json to_json(const rationality::Verdict& v) {
  json evidence = json::array();
  for (const auto& e : v.evidence) {
    evidence.push_back({{"condition", e.condition},
                        {"clause", e.clause},
                        {"result", e.result},
                        {"detail", e.detail}});
  }
  json j = {{"outcome", rationality::to_string(v.outcome)},
            {"evidence", evidence},
            {"heuristic", v.heuristic},
            {"incomplete", v.incomplete}};
  j["witness"] = v.witness ? json{{"W1", to_json(v.witness->W1)}, {"W2", to_json(v.witness->W2)}}
                           : json(nullptr);
  return j;
}

json to_json(const catalog::CatalogEntry& e) {
  return {{"n", e.n},
          {"trigger", catalog::to_string(e.trigger)},
          {"Q", to_json(e.Q.summands())},
          {"S", to_json(e.S.summands())},
          {"dim_Q", e.Q.dimension().get_str()},
          {"dim_S", e.S.dimension().get_str()},
          {"verdict", to_json(e.verdict)}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string s = text;
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) s.erase(0, 1);
  if (!s.empty() && (s.back() == ']' || s.back() == ')')) s.pop_back();
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) fail("bad integer token '" + tok + "' in \"" + text + "\"");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace saff::io
