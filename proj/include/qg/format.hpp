#ifndef QG_FORMAT_HPP
#define QG_FORMAT_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "qg/burnside.hpp"
#include "qg/cayley.hpp"
#include "qg/oracle.hpp"

namespace qg {

// Serialisation of the library's artifacts. Integers that can outgrow a
// 64-bit word are emitted as decimal strings in JSON so nothing is ever
// rounded through a double.

nlohmann::json census_json(const CensusTable& c);
std::string census_text(const CensusTable& c);   // aligned class-by-class table
std::string census_csv(const CensusTable& c);    // one row per class

nlohmann::json orbit_census_json(const OrbitCensus& c);

// Table file format: first line "n", then n rows of n space-separated
// 1-based entries. Transversal file format: n lines, each the one-line
// image form of sigma_i. JSON alternatives: {"n":..,"table":[[..]]} and
// {"n":..,"perms":["..",..]}.
std::string table_text(const CayleyTable& q);
nlohmann::json table_json(const CayleyTable& q);
std::string transversal_text(const Transversal& t);
nlohmann::json transversal_json(const Transversal& t);

using Structure = std::variant<CayleyTable, Transversal>;

/// Sniffs text vs JSON and table vs transversal, validates, and returns the
/// parsed structure. Throws std::invalid_argument with a location on any
/// malformed or axiom-violating input.
Structure parse_structure(const std::string& content);

/// Like parse_structure but requires a table.
CayleyTable parse_table(const std::string& content);

}  // namespace qg

#endif  // QG_FORMAT_HPP
