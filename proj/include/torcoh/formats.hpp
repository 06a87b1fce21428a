#pragma once

#include <string>

#include <json.hpp>

#include "torcoh/complexes.hpp"
#include "torcoh/growth.hpp"
#include "torcoh/torsion.hpp"

namespace torcoh {

using Json = nlohmann::json;

// JSON envelopes. Every document carries a "format" tag and a "version"
// integer; integers are decimal strings so values never hit the 53-bit
// double ceiling of plain JSON numbers. Matrices are sparse triple lists
// sorted by (row, col). Emission is deterministic: objects print with sorted
// keys and the indentation below is fixed.

std::string dump_json(const Json& j);          // 2-space indent, trailing \n
Json parse_json(const std::string& text);      // fails (parse) with position

Json matrix_to_json(const SparseIntMatrix& a);
SparseIntMatrix matrix_from_json(const Json& j);

// "torcoh-complex": generator alphabet, basis sizes, boundary entries as
// lists of [word, coefficient] terms.
Json complex_to_json(const GroupRingComplex& gc);
GroupRingComplex complex_from_json(const Json& j);

// "torcoh-module": rank plus one action matrix per generator.
Json module_to_json(const CoeffModule& m);
CoeffModule module_from_json(const Json& j);

// "torcoh-cochain": plain integer cochain complex.
Json cochain_to_json(const CochainComplex& cc);
CochainComplex cochain_from_json(const Json& j);

// Result fragments (no envelope; jobs wrap them).
Json cohomology_to_json(const CohomologyResult& r);
Json torsion_to_json(const TorsionValue& t);
Json verify_to_json(const VerifyReport& r);

// Growth series CSV: lines "m,value", optional "m,value" header, '#'
// comments. Values are decimal reals.
GrowthSeries series_from_csv(const std::string& text);
std::string series_to_csv(const GrowthSeries& s);

}  // namespace torcoh
