#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "premon/characters.hpp"
#include "premon/coherence.hpp"
#include "premon/group.hpp"
#include "premon/quantum_double.hpp"

namespace premon::io {

  using Json = nlohmann::json;

  // Magnitudes below this are written as 0 (floating noise around exact zeros).
  inline constexpr double kFlushBelow = 1e-12;

  // Rounded to 12 significant digits; |v| < kFlushBelow and -0 become 0.
  double rounded(double v);
  Json   complex_json(Complex z);  // [re, im]

  // { "rows": r, "cols": c, "entries": [[[re, im], ...], ...] }
  Json   matrix_json(Matrix const& m);
  Matrix matrix_from_json(Json const& j);

  // { "order", "identity", "mult", "labels" }
  Json     group_json(FiniteGroup const& g);
  GroupPtr group_from_json(Json const& j);

  // { "bits": [...] }
  Json      signature_json(Signature const& s);
  Signature signature_from_json(Json const& j);

  // [ { "key": [...], "re": x, "im": y }, ... ] sorted by key
  Json tensor_json(AlgebraTensor const& x);

  Json character_table_json(CharacterTable const& t);

  // [ { "label", "dim", "matrices": [ matrix per element ] } ]
  Json               irreps_json(std::vector<Irrep> const& irreps);
  // Reads explicit irreps of a group and checks them against the character
  // table: every matrix list must be a homomorphism whose character matches
  // a row of the table. Output is relabelled in table order. Throws
  // ValidationError otherwise.
  std::vector<Irrep> irreps_from_json(Json const& j, CharacterTable const& table);

  Json report_json(CoherenceReport const& r);
  Json symmetry_json(SymmetryResult const& s);

  Json read_json_file(std::string const& path);

}  // namespace premon::io
