#pragma once

#include <json.hpp>

#include "qmat/classical.hpp"
#include "qmat/codes.hpp"
#include "qmat/euler.hpp"

namespace qmat {

// Reads and parses a JSON file; parse errors are rethrown with
// "path:line:col: message".
nlohmann::json load_json_file(const std::string& path);

// {"q">=2, "n", "kind": "uniform"|"representable"|"table", ...}; "uniform"
// takes "k", "representable" takes "m" and "matrix" (entries are F_{q^m}
// indices), "table" takes "table" with one rank per subspace in canonical id
// order (dimension ascending, subspace order within a dimension)
QMatroid qmatroid_from_json(const nlohmann::json& j, long budget = 10000000);

// the q = 1 mirror: {"q":1, "n", "kind": "uniform"|"table"|"matrix"|
// "graphic", ...}; "table" is indexed by subset bitmask, "matrix" takes
// "field" and "matrix" (columns are the ground set), "graphic" takes
// "vertices" and "edges"
ClassicalMatroid classical_from_json(const nlohmann::json& j);

// {"q", "m", "n", "k", "basis":"default", "matrix"}
RankMetricCode code_from_json(const nlohmann::json& j);

// census + formula + lambda table + mu_bar + restriction/homology report;
// exact integers are decimal strings
nlohmann::json euler_report_json(const QMatroid& M);

// face census + chain route + Mobius numbers + the sign identity check
nlohmann::json classical_report_json(const ClassicalMatroid& M);

// d_r by both routes, the reading, and a minimum-support certificate per r
nlohmann::json weights_report_json(const RankMetricCode& C);

// cycle lattice sizes and Mobius numbers
nlohmann::json mobius_report_json(const QMatroid& M);
nlohmann::json mobius_report_json(const ClassicalMatroid& M);

// Hasse diagram of the cycle lattice; nodes are labeled with the space (RREF
// rows as "a1,...,an" lines, or the subset for q = 1), dim/nullity and mu
std::string lattice_dot(const QMatroid& M);
std::string lattice_dot(const ClassicalMatroid& M);

}  // namespace qmat
