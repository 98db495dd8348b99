#include "termheat/corpus.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "record.hpp"

namespace termheat {

using Json = nlohmann::ordered_json;

namespace detail {

Document document_from_json(const Json& j) {
  if (!j.is_object()) throw RecordError{"record is not an object"};

  Document doc;
  auto id = j.find("id");
  if (id == j.end() || !id->is_string() || id->get_ref<const std::string&>().empty())
    throw RecordError{"missing id"};
  doc.id = id->get<std::string>();

  auto title = j.find("title");
  if (title == j.end() || !title->is_string()) throw RecordError{"missing title"};
  doc.title = title->get<std::string>();

  if (auto abstract = j.find("abstract"); abstract != j.end() && !abstract->is_null()) {
    if (!abstract->is_string()) throw RecordError{"abstract is not a string"};
    doc.abstract = abstract->get<std::string>();
  }

  auto terms = j.find("terms");
  if (terms == j.end() || !terms->is_array()) throw RecordError{"missing terms"};
  std::set<Term> seen;
  for (const auto& raw : *terms) {
    if (!raw.is_string()) throw RecordError{"term is not a string"};
    const auto& value = raw.get_ref<const std::string&>();
    auto normalized = try_normalize_term(value);
    if (!normalized) continue;
    if (seen.insert(*normalized).second) doc.terms.push_back(value);
  }
  if (doc.terms.empty()) throw RecordError{"no indexing terms"};

  if (auto labels = j.find("labels"); labels != j.end() && !labels->is_null()) {
    if (!labels->is_object()) throw RecordError{"labels is not an object"};
    for (const auto& [raw, label] : labels->items()) {
      if (!label.is_string()) throw RecordError{"label is not a string"};
      doc.labels.emplace(raw, label.get<std::string>());
    }
  }
  return doc;
}

Json document_to_json(const Document& doc) {
  Json j;
  j["id"] = doc.id;
  j["title"] = doc.title;
  if (doc.abstract) j["abstract"] = *doc.abstract;
  j["terms"] = doc.terms;
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j;
}

}  // namespace detail

namespace {

using detail::RecordError;

Document parse_record(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error&) {
    throw RecordError{"malformed JSON"};
  }
  return detail::document_from_json(j);
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

std::vector<Term> normalized_terms(const Document& doc) {
  std::set<Term> unique;
  for (const auto& raw : doc.terms) {
    if (auto t = try_normalize_term(raw)) unique.insert(std::move(*t));
  }
  return {unique.begin(), unique.end()};
}

DocumentSet DocumentSet::from(std::vector<Document> documents) {
  DocumentSet set;
  for (const auto& doc : documents) {
    for (auto& t : normalized_terms(doc)) set.vocabulary.insert(std::move(t));
  }
  set.documents = std::move(documents);
  return set;
}

std::string Rejection::to_string() const {
  return reason + ", line " + std::to_string(line);
}

ParseResult parse_corpus(std::istream& in) {
  ParseResult result;
  std::vector<Document> accepted;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      Document doc = parse_record(line);
      if (!ids.insert(doc.id).second) throw RecordError{"duplicate id"};
      accepted.push_back(std::move(doc));
    } catch (const RecordError& e) {
      result.rejections.push_back({line_no, e.reason});
    }
  }
  result.documents = DocumentSet::from(std::move(accepted));
  return result;
}

ParseResult parse_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

void write_corpus(std::ostream& out, const DocumentSet& documents) {
  for (const auto& doc : documents.documents) out << detail::document_to_json(doc).dump() << '\n';
}

}  // namespace termheat
