#ifndef SYMRANK_IO_HPP
#define SYMRANK_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "symrank/apolarity.hpp"
#include "symrank/decomposition.hpp"
#include "symrank/witness.hpp"

namespace symrank {

// All big integers and rationals are serialized as decimal strings so JSON
// consumers never lose precision; small structural integers (d, n, r, ranks,
// sizes) stay native JSON numbers. Object key order follows the interchange
// schemas, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

// Decomposition interchange:
// {"d": int, "n": int, "scale": "<decimal>",
//  "summands": [{"weight": "<decimal>", "minus_set": [int...]}, ...]}
// minus_set holds sorted 1-based variable indices. Round-trips bit-exactly.
Json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const VerificationReport& report);
Json to_json(const BoundsReport& report);
Json to_json(const IdentityReport& report);
Json to_json(const SearchReport& report, bool include_certificates = false);
Json to_json(const Polynomial& p);
Json matrix_to_json(const ExactMatrix& m, std::optional<int> rank = std::nullopt);

std::string to_text(const Decomposition& dec);
std::string to_text(const VerificationReport& report);
std::string to_text(const BoundsReport& report);
std::string to_text(const IdentityReport& report);
std::string to_text(const SearchReport& report, bool include_certificates = false);

/// CSV with a label header row and column; entries as decimal strings.
std::string matrix_to_csv(const ExactMatrix& m);

/// One line of 0/1 characters per row; requires a binary matrix.
std::string matrix_to_bitmap(const ExactMatrix& m);

/// Aligned table with compact index labels; zero rows/columns are marked
/// with a '*' after their label.
std::string matrix_pretty(const ExactMatrix& m);

}  // namespace symrank

#endif
