#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "p1bimod/corpus.hpp"

namespace p1bimod {

using Json = nlohmann::ordered_json;

// All parsers throw EngineError(FORMAT) on malformed documents.

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field field);

Json functor_to_json(const FunctorData& f);
FunctorData functor_from_json(const Json& j);

Json torsion_to_json(const TorsionSheaf& t);
TorsionSheaf torsion_from_json(const Json& j, Field field);

/// {"bundle":[ints], "torsion":[{"point":[s,s],"mult":m}]}; an optional
/// "field" key overrides the given field.
Json sheaf_to_json(const CoherentSheaf& s);
CoherentSheaf sheaf_from_json(const Json& j, Field field);
Field sheaf_field(const Json& j, Field fallback);

/// {"field", "lo", "hi", "torsion", "h1":[{"i","l"}], "gauge_seed"}; the
/// window keys may be omitted and then default as in the corpus.
Json spec_to_json(const ComposeSpec& s);
ComposeSpec spec_from_json(const Json& j);

Json h1_to_json(const H1Mults& h1);
Json report_to_json(const DecomposeResult& r, const PropertyReport& props);

/// Throws EngineError(IO) if unreadable, FORMAT if not JSON.
Json read_json_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace p1bimod
