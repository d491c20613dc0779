#pragma once

#include <string>

#include <json.hpp>

#include "saff/catalog.hpp"
#include "saff/filtration.hpp"
#include "saff/matmodel.hpp"
#include "saff/rationality.hpp"
#include "saff/repclass.hpp"
#include "saff/weight.hpp"

// JSON encodings shared by the CLI and the Python bindings. Readers throw
// std::invalid_argument with the offending field in the message.
namespace saff::io {

using nlohmann::json;

json to_json(const Weight& w);
/// Accepts any non-increasing integer array of length ≤ n and normalizes it.
Weight weight_from_json(const json& j, int n);

/// {"n": 3, "summands": [{"lambda": [2,1,0], "mult": 1}, ...]}
json to_json(const WeightMultiset& m);
WeightMultiset multiset_from_json(const json& j);
/// Like multiset_from_json, but with the rank supplied by the caller; "n" is
/// then optional and must agree if present.
WeightMultiset multiset_from_json(const json& j, int n);

json to_json(const repclass::StabilizerReport& r);
json to_json(const repclass::ClassifyResult& r);

enum class MatrixLayout { Dense, Sparse };

/// {"n", "N", "sl": [matrix...], "translations": [matrix...], "grading"}.
/// Dense matrices are row-major arrays of "p/q" strings; sparse ones are
/// {"rows", "cols", "entries": [[i, j, "p/q"], ...]} in column-major order.
/// The reader accepts either layout (and plain integers) per matrix.
json to_json(const matmodel::AffMatrixRep& rep, MatrixLayout layout = MatrixLayout::Dense);
matmodel::AffMatrixRep model_from_json(const json& j);

struct FiltrationChecks {
  bool duality = false;
  bool blocks = false;
  bool embedding = false;
  bool degree_bound = false;
};
json to_json(const filtration::Filtration& f, const FiltrationChecks& checks);

rationality::TwoStepExtension extension_from_json(const json& j);
json to_json(const rationality::TwoStepExtension& ext);
json to_json(const rationality::Verdict& v);

json to_json(const catalog::CatalogEntry& e);

/// Parses "2,1,0" (optionally bracketed) into integers; throws
/// std::invalid_argument naming the bad token.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace saff::io
