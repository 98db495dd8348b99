#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termheat/corpus.hpp"
#include "termheat/posting_list.hpp"

namespace termheat {

/// Dense id of a vocabulary term. Ids follow the lexicographic order of the
/// normalized terms, so comparing ids compares terms.
using TermId = std::uint32_t;

/// Immutable inverted index over a DocumentSet.
///
/// term postings come from the controlled indexing terms, text postings from
/// the tokenized title and abstract. The index is never mutated after
/// construction; share it as `std::shared_ptr<const CoIndex>` and swap the
/// whole value to re-index.
class CoIndex {
 public:
  CoIndex() = default;

  std::size_t doc_count() const noexcept { return docs_.size(); }
  std::size_t vocab_size() const noexcept { return vocab_.size(); }

  const Document& document(DocOrdinal ordinal) const { return docs_.at(ordinal); }
  std::span<const Document> documents() const noexcept { return docs_; }

  std::optional<TermId> find_term(const Term& term) const;
  const Term& term(TermId id) const { return vocab_.at(id); }
  std::span<const Term> vocabulary() const noexcept { return vocab_; }
  const PostingList& term_postings(TermId id) const { return term_postings_.at(id); }
  /// Display label of a term, if any document supplied one.
  const std::optional<std::string>& label(TermId id) const { return labels_.at(id); }

  /// Postings of a title/abstract token; empty list when the token is unseen.
  const PostingList& text_postings(const Term& token) const;
  const std::map<Term, PostingList>& all_text_postings() const noexcept { return text_postings_; }

  /// Sorted term ids of one document.
  std::span<const TermId> doc_terms(DocOrdinal ordinal) const { return doc_terms_.at(ordinal); }
  /// Title tokens followed by abstract tokens.
  std::span<const Term> doc_tokens(DocOrdinal ordinal) const { return doc_tokens_.at(ordinal); }

  PostingList all_documents() const { return PostingList::all(docs_.size()); }

 private:
  friend CoIndex build_index(const DocumentSet& documents);
  friend CoIndex decode_snapshot(std::string_view bytes);

  // Fills doc_terms_, doc_tokens_ and labels_ from the primary tables.
  void derive_tables();

  std::vector<Document> docs_;
  std::vector<Term> vocab_;
  std::vector<PostingList> term_postings_;
  std::map<Term, PostingList> text_postings_;
  std::vector<std::optional<std::string>> labels_;
  std::vector<std::vector<TermId>> doc_terms_;
  std::vector<std::vector<Term>> doc_tokens_;
};

CoIndex build_index(const DocumentSet& documents);

struct QueryMatch {
  std::vector<Term> query;  // tokenized search phrase
  PostingList matched_docs;
};

/// Documents whose title+abstract tokens contain the tokenized query as a
/// consecutive run, united with documents indexed by normalize(q).
/// Throws Error(empty_query) if q normalizes to nothing.
QueryMatch match_query(const CoIndex& index, std::string_view q);

/// base ∩ D(t1) ∩ ... ∩ D(tn). A term missing from the index empties the
/// result; no terms returns base unchanged.
PostingList conjunction(const CoIndex& index, const PostingList& base, std::span<const Term> terms);

// Snapshots: a single JSON document, optionally gzip-compressed. Decoding
// detects gzip by its magic bytes.
inline constexpr int kSnapshotVersion = 1;

std::string encode_snapshot(const CoIndex& index, bool gzip = false);
/// Throws Error(unsupported_snapshot_version) or Error(corrupt_snapshot).
CoIndex decode_snapshot(std::string_view bytes);

void save_snapshot(const CoIndex& index, const std::filesystem::path& destination, bool gzip = false);
/// Adds Error(io_error) for unreadable files.
CoIndex load_snapshot(const std::filesystem::path& source);

}  // namespace termheat
