#pragma once

#include <json.hpp>

#include "ruled/blowuptree.hpp"
#include "ruled/homotopy.hpp"
#include "ruled/surface.hpp"

namespace ruled {

using Json = nlohmann::ordered_json;

Json surface_to_json(const NodalSurface& X);
NodalSurface surface_from_json(const Json& j);

Json tree_to_json(const BlowupTree& t);
BlowupTree tree_from_json(const Json& j);

Json polyext_to_json(const Ring& R, const PolyExt& p);
PolyExt polyext_from_json(const Ring& R, const Json& j);

Json witness_to_json(const Ring& R, const Witness& w);
Witness witness_from_json(const Ring& R, const Json& j);

Json frame_to_json(const Ring& R, const Frame& f);
Frame frame_from_json(const Ring& R, const Json& j);

Json verdict_to_json(const Ring& R, const Verdict& v);
Json report_to_json(const VerifyReport& rep);

// Homogeneous point "[p:q]".
std::pair<Rat, Rat> parse_point(const std::string& s);

// Parses text, reporting the offending position as ParseError.
Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace ruled
