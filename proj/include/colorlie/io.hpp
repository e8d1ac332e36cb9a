#pragma once

#include "colorlie/color_lie.hpp"
#include "colorlie/crossed.hpp"
#include "colorlie/rep_theory.hpp"

#include <json.hpp>

#include <string>

namespace colorlie {

using json = nlohmann::json;

/// Pretty-printed JSON with sorted keys and a trailing newline.  Equal
/// values give byte-identical text.
std::string dump_canonical(const json &j);
/// Throws ParseError (byte offset) on malformed JSON and AlgebraError
/// (Invalid) when the file cannot be read.
json read_json_file(const std::string &path);
json parse_json_text(const std::string &text);
void write_text_file(const std::string &path, const std::string &text);

json to_json(const Scalar &s);
Scalar scalar_from_json(const json &j);

json to_json(const FiniteAbelianGroup &G);
FiniteAbelianGroup group_from_json(const json &j);

/// {"g|h": "value"} over all pairs.
json table_to_json(const GroupTable &t);
/// Either a full "g|h" table or {"exponent_matrix": ..., "root_order": r}.
GroupTable table_from_json(const FiniteAbelianGroup &G, const json &j,
                           std::optional<ExponentForm> *form = nullptr);

/// Exponent form when available, otherwise the table.
json values_to_json(const GroupTable &t, const std::optional<ExponentForm> &form);

/// {"kind": "bicharacter", "group": [...], "values": ...}
json to_json(const Bicharacter &eps);
Bicharacter bicharacter_from_json(const json &j);
/// {"kind": "cocycle", "group": [...], "values": ...}
json to_json(const Cocycle &c);
Cocycle cocycle_from_json(const json &j);

/// {"kind": "color_lie", "group", "epsilon", "basis": [{"name","degree"}],
///  "brackets": [[i, j, k, "value"], ...]}
json to_json(const ColorLieAlgebra &L);
/// Parses without validating.
ColorLieData algebra_data_from_json(const json &j);
ColorLieAlgebra algebra_from_json(const json &j);

/// {"kind": "twist_triple", "source_group", "target_group", "cocycle",
///  "phi": "identity" | {"g": "phi(g)"}, "eps_prime"}
json to_json(const TwistTriple &t);
TwistTriple triple_from_json(const json &j);

/// {"kind": "assoc_algebra", "basis": [{"name", "degree"?}], "group"?,
///  "unit": [...], "products": [[i, j, k, "value"], ...]}
json to_json(const AssocAlgebra &A);
AssocAlgebra assoc_from_json(const json &j);

/// {"kind": "representation", "algebra": name | inline algebra, "dim",
///  "matrices": [[row, ...], ...]} with rows of Scalar strings.
json to_json(const Representation &r, const std::string &algebra_name = "");
Representation representation_from_json(const json &j);

/// The "kind" field, or "" when absent.
std::string kind_of(const json &j);

} // namespace colorlie
