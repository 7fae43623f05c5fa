#pragma once

#include <variant>

#include "json.hpp"
#include "qdom/approx.hpp"

namespace qdom {

/// Single self-describing UTF-8 JSON document format. Every file carries a
/// top-level "kind" in {"quantale", "lordered-set", "closure-space",
/// "approx-relation"}; degree values are always quantale element labels.
/// Parse/shape problems raise StructuralError; axiom violations do not —
/// a well-formed but lawless object loads fine and fails its validator.

nlohmann::json toJson(const FiniteQuantale& L);
nlohmann::json toJson(const LOrderedSet& P);
nlohmann::json toJson(const ClosureSpace& S);
nlohmann::json toJson(const ApproxRelation& R);

FiniteQuantale quantaleFromJson(const nlohmann::json& j);
LOrderedSet lorderFromJson(const nlohmann::json& j);
ClosureSpace closureFromJson(const nlohmann::json& j);
ApproxRelation relationFromJson(const nlohmann::json& j);

using LoadedObject = std::variant<QuantalePtr, LOrderedSet, ClosureSpace, ApproxRelation>;

std::string kindOf(const LoadedObject& o);
LoadedObject loadAny(const nlohmann::json& j);
LoadedObject loadFile(const std::string& path);
void saveFile(const std::string& path, const nlohmann::json& j);

}  // namespace qdom
