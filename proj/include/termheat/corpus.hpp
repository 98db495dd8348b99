#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace termheat {

/// A term in canonical form: NFC, case-folded, trimmed, internal whitespace
/// collapsed to single spaces. Never empty. Only normalize_term() makes one,
/// so holding a Term is proof the value is canonical.
class Term {
 public:
  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.value_ <=> b.value_;
  }

 private:
  friend Term normalize_term(std::string_view raw);
  explicit Term(std::string value) : value_(std::move(value)) {}

  std::string value_;
};

/// Throws Error(empty_term) when nothing is left after normalization.
Term normalize_term(std::string_view raw);

/// Non-throwing variant for callers that drop empty terms.
std::optional<Term> try_normalize_term(std::string_view raw);

/// Splits free text into normalized tokens. Separators are maximal runs of
/// non-alphanumeric characters; a single hyphen between two alphanumerics
/// stays inside its token ("right-wing").
std::vector<Term> tokenize(std::string_view text);

struct Document {
  std::string id;
  std::string title;
  std::optional<std::string> abstract;
  // Raw controlled-vocabulary terms, at most one per normalized form.
  std::vector<std::string> terms;
  // Raw term -> display label. Display only, never used for counting.
  std::map<std::string, std::string> labels;

  friend bool operator==(const Document&, const Document&) = default;
};

std::vector<Term> normalized_terms(const Document& doc);

struct DocumentSet {
  std::vector<Document> documents;
  std::set<Term> vocabulary;

  /// Computes the vocabulary for an already validated document list.
  static DocumentSet from(std::vector<Document> documents);

  friend bool operator==(const DocumentSet&, const DocumentSet&) = default;
};

struct Rejection {
  std::size_t line = 0;  // 1-based
  std::string reason;

  std::string to_string() const;  // "duplicate id, line 6"
};

struct ParseResult {
  DocumentSet documents;
  std::vector<Rejection> rejections;
};

/// Reads JSONL records `{"id", "title", "abstract"?, "terms", "labels"?}`.
/// Bad records are reported in `rejections` and skipped; parsing never stops
/// early. Blank lines are ignored.
ParseResult parse_corpus(std::istream& in);
ParseResult parse_corpus(std::string_view text);

void write_corpus(std::ostream& out, const DocumentSet& documents);

}  // namespace termheat
