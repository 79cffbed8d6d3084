#pragma once

#include <json.hpp>

#include "rswt/genfunc.hpp"
#include "rswt/rules.hpp"
#include "rswt/weights.hpp"

namespace rswt {

// Serialization conventions: polynomial coefficients and weights are emitted
// as decimal strings (they routinely exceed 64 bits), matrices as plain
// integer grids (entries are in {-1, 0, 1, 2}).

nlohmann::json poly_to_json(const IntPoly& p);          // ascending coefficient strings
nlohmann::json matrix_to_json(const IntMatrix& m);      // row-major array of arrays
nlohmann::json matrix_to_json(const SparseIntMatrix& m);
nlohmann::json index_sets_to_json(const IndexSets& idx);
nlohmann::json rules_to_json(const RulesArtifacts& a, bool include_expanded);
nlohmann::json ecc_report_to_json(const ECCReport& rep);
nlohmann::json gf_to_json(const RationalGF& gf);
nlohmann::json plateaued_to_json(const PlateauedForm& f);

} // namespace rswt
