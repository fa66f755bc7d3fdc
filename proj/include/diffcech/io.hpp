#pragma once

// JSON documents: presentations, cochains, bundles and crossed homomorphisms.
// A reference is either a file path or "gallery:NAME".

#include "diffcech/bundle.hpp"
#include "diffcech/grpcoh.hpp"
#include "diffcech/presentation_io.hpp"

#include <optional>
#include <string>

namespace diffcech {

/// ParseError with field "SOURCE:LINE:COL" on malformed JSON.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// A presentation object or a "gallery:NAME" string.
PresentationPtr presentation_from_value(const Json& j, const std::string& path);

/// {"degree": k, "values": {"(0,1)": "3"}} on nerves; "function", "crossed" or "table" on quotients.
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, const PresentationPtr& p, const GroupTag& tag, const std::string& path);

/// {"values": {"g1": "<poly>", ...}}
Json crossed_to_json(const CrossedHom& beta);
CrossedHom crossed_from_json(const Json& j, const PresentationPtr& p, const std::string& path);

/// {"base": ..., "group": "<tag>", "cocycle": ...}
Json bundle_to_json(const BundlePresentation& b);

struct Document {
    std::string source;
    PresentationPtr presentation;
    std::optional<GroupTag> group;
    /// From "cochain" or "cocycle".
    std::optional<Cochain> cochain;
    bool is_bundle = false;
};

/// Loads a presentation, cochain or bundle document.
Document load_document(const std::string& ref);

} // namespace diffcech
