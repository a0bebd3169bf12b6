#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "fforest/forest.hpp"
#include "fforest/oracle.hpp"
#include "fforest/verify.hpp"

namespace fforest {

// Semigroup document: {"name": str, "elements": [str...], "table": [[int...]...]}
// Homomorphism document: {"semigroup": <inline object | file path>,
//                         "alphabet": {"a": "elementName", ...}}
// Both reject unknown keys. All parse failures throw ParseError with the
// offending location in the message.

Semigroup semigroup_from_json(const nlohmann::json& j);
nlohmann::json semigroup_to_json(const Semigroup& s);
Semigroup load_semigroup_file(const std::filesystem::path& path);

/// base_dir resolves a relative "semigroup" path entry.
Homomorphism homomorphism_from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir);
nlohmann::json homomorphism_to_json(const Homomorphism& phi);
Homomorphism load_homomorphism_file(const std::filesystem::path& path);

// Forest document: leaves are {"letter": "a", "image": "g"}, internal
// nodes {"image": "e", "idempotent": bool, "children": [...]}; the root
// object additionally carries "word", "height" and "bound" (and, when
// written by the CLI, "tool_version" and "seed").

nlohmann::json forest_to_json(const FactTree& tree, const Homomorphism& phi,
                              const GreenData& green);
FactTree forest_from_json(const nlohmann::json& j, const Homomorphism& phi);

nlohmann::json verify_report_to_json(const VerifyReport& rep);
nlohmann::json oracle_result_to_json(const OracleResult& res,
                                     const Homomorphism& phi,
                                     const GreenData& green);

/// Eggbox view: one entry per J-class with its R-class ids, L-class ids,
/// common H-class size and the R x L grid of group flags.
nlohmann::json eggbox_to_json(const Semigroup& s, const GreenData& green);

std::string forest_to_dot(const FactTree& tree, const Semigroup& s);

/// Hasse diagram of the J-class order (edges point from higher to lower).
std::string j_order_to_dot(const Semigroup& s, const GreenData& green);

}  // namespace fforest
