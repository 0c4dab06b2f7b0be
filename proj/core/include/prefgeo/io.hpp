#pragma once

#include <string>

#include <json.hpp>

#include "prefgeo/arrangement.hpp"
#include "prefgeo/constructions.hpp"
#include "prefgeo/profiles.hpp"

namespace prefgeo {

/// Integer when the value is integral and fits a 64-bit int, otherwise
/// the exact string "p/q"; parsing also accepts decimal strings.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const Profile& prof);
Profile profile_from_json(const nlohmann::json& j);

nlohmann::json embedding2_to_json(const Embedding2& emb);
Embedding2 embedding2_from_json(const nlohmann::json& j);

nlohmann::json embeddingd_to_json(const EmbeddingD& emb);
EmbeddingD embeddingd_from_json(const nlohmann::json& j);

/// SVG 1.1 drawing of the two candidates and their bisector; byte-stable
/// for a fixed input.
std::string bisector_svg(const Bisector& b);

/// SVG 1.1 drawing of candidates, all bisectors, and one ranking label
/// per cell at its witness point.
std::string arrangement_svg(const Embedding2& emb, NormTag norm,
                            const std::vector<Cell>& cells);

}  // namespace prefgeo
