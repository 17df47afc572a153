#pragma once

#include <json.hpp>

#include <string>

#include "grautkit/gens.hpp"

namespace grautkit {

/// The factor list as a JSON array of tagged objects:
///   {"type":"T","lambda":"p/q"}
///   {"type":"U","lambda":"p/q","f":"<poly text>"}
///   {"type":"S","tau":{...},"theta":{"lambda":..,"mu":..,"k":..},"s":{...}}
/// Rationals are serialized as "p" or "p/q" strings.
nlohmann::json word_to_json(const GenWord& word);

/// The full decompose document: {"grading": {...}, "word": [...]}.
nlohmann::json genword_document(const GenWord& word);

/// Reads a document produced by genword_document. Every factor is
/// re-validated against its membership invariants.
GenWord genword_from_document(const nlohmann::json& doc);

std::string grading_to_text(const NormalizedGrading& g);

}  // namespace grautkit
