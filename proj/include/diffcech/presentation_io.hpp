#pragma once

// JSON form of presentations. Keys are written sorted, so dump(2) of the
// result is the canonical text.

#include "diffcech/presentation.hpp"

#include <json.hpp>

namespace diffcech {

using Json = nlohmann::json;

Json presentation_to_json(const Presentation& p);
/// ParseError (field path in `field()`) on schema violations; ValidationError on bad structure.
Presentation presentation_from_json(const Json& j, const std::string& path = "");

std::string canonical_text(const Presentation& p);

/// Helpers shared by the other readers.
Scalar scalar_from_json(const Json& j, const std::string& path);
Json scalar_to_json(const Scalar& s);
const Json& require(const Json& j, const std::string& key, const std::string& path);
std::string join_path(const std::string& path, const std::string& key);

} // namespace diffcech
