#pragma once

#include <string>

#include <json.hpp>

#include "termheat/heatmap.hpp"
#include "termheat/recommender.hpp"
#include "termheat/session.hpp"

namespace termheat::gateway {

// Object keys keep insertion order so output is stable byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const TermCount& tc);
Json to_json(const HeatMap& map);
Json to_json(const Recommendation& rec, std::span<const Term> scope, std::size_t k, bool include_self);
Json to_json(const DocumentPage& page, std::string_view query, std::span<const Term> scope,
             std::span<const Term> selection);
Json stats_json(const CoIndex& index);

/// Compact JSON followed by a newline. CLI and HTTP share this exact body.
std::string render(const Json& body);

/// Header row of column terms, one line per row term, counts in the cells and
/// an empty field for not-applicable cells. Fields are quoted RFC 4180 style.
std::string heatmap_csv(const HeatMap& map);

}  // namespace termheat::gateway
