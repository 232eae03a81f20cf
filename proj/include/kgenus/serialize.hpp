#pragma once

// JSON forms used by the command-line tool, plus the inline genus grammar
//   "p1:s1,p2:s2;default=s"     e.g. "3:-1,7:+1;default=+1"
// where an omitted default means +1.

#include <kgenus/obstruction.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace kgenus {

using Json = nlohmann::ordered_json;

Json to_json(const RectorInvariant& genus);
Json to_json(const Verdict& verdict);
Json to_json(const ForcedGenusReport& report);
Json to_json(const XpExample& example);

/// Inverse of to_json(RectorInvariant). Throws std::invalid_argument on any
/// schema violation.
RectorInvariant genus_from_json(const Json& j);

/// Parses the inline grammar, or a JSON document when the text starts with '{'.
RectorInvariant parse_genus_spec(std::string_view text);

/// Inline form of a genus point; parse_genus_spec(format_genus_spec(g)) == g.
std::string format_genus_spec(const RectorInvariant& genus);

/// Coefficient as a JSON integer when it fits in 64 bits, else as a decimal string.
Json coefficient_json(const Coefficient& c);

}  // namespace kgenus
