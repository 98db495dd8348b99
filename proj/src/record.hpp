#pragma once

#include <string>

#include <json.hpp>

#include "termheat/corpus.hpp"

namespace termheat::detail {

struct RecordError {
  std::string reason;
};

/// Validates one corpus record. Throws RecordError.
Document document_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json document_to_json(const Document& doc);

}  // namespace termheat::detail
