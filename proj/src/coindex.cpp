#include "termheat/coindex.hpp"

#include <algorithm>

#include "termheat/error.hpp"

namespace termheat {

std::optional<TermId> CoIndex::find_term(const Term& term) const {
  auto it = std::lower_bound(vocab_.begin(), vocab_.end(), term);
  if (it == vocab_.end() || *it != term) return std::nullopt;
  return static_cast<TermId>(it - vocab_.begin());
}

const PostingList& CoIndex::text_postings(const Term& token) const {
  static const PostingList kEmpty;
  auto it = text_postings_.find(token);
  return it == text_postings_.end() ? kEmpty : it->second;
}

void CoIndex::derive_tables() {
  doc_terms_.assign(docs_.size(), {});
  for (TermId id = 0; id < term_postings_.size(); ++id) {
    for (DocOrdinal d : term_postings_[id]) doc_terms_[d].push_back(id);
  }

  doc_tokens_.clear();
  doc_tokens_.reserve(docs_.size());
  for (const auto& doc : docs_) {
    auto tokens = tokenize(doc.title);
    if (doc.abstract) {
      auto more = tokenize(*doc.abstract);
      tokens.insert(tokens.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
    }
    doc_tokens_.push_back(std::move(tokens));
  }

  labels_.assign(vocab_.size(), std::nullopt);
  for (const auto& doc : docs_) {
    for (const auto& [raw, label] : doc.labels) {
      auto term = try_normalize_term(raw);
      if (!term) continue;
      if (auto id = find_term(*term); id && !labels_[*id]) labels_[*id] = label;
    }
  }
}

CoIndex build_index(const DocumentSet& documents) {
  CoIndex index;
  index.docs_ = documents.documents;

  std::map<Term, PostingListBuilder> terms;
  for (DocOrdinal d = 0; d < index.docs_.size(); ++d) {
    for (auto& t : normalized_terms(index.docs_[d])) terms[std::move(t)].add(d);
  }
  index.vocab_.reserve(terms.size());
  index.term_postings_.reserve(terms.size());
  for (auto& [term, builder] : terms) {
    index.vocab_.push_back(term);
    index.term_postings_.push_back(std::move(builder).build());
  }

  index.derive_tables();

  std::map<Term, PostingListBuilder> text;
  for (DocOrdinal d = 0; d < index.doc_tokens_.size(); ++d) {
    for (const auto& token : index.doc_tokens_[d]) text[token].add(d);
  }
  for (auto& [token, builder] : text) index.text_postings_.emplace(token, std::move(builder).build());
  return index;
}

QueryMatch match_query(const CoIndex& index, std::string_view q) {
  auto normalized = try_normalize_term(q);
  if (!normalized) throw Error(Errc::empty_query);

  QueryMatch match;
  match.query = tokenize(q);

  PostingList phrase_docs;
  if (!match.query.empty()) {
    std::vector<const PostingList*> lists;
    lists.reserve(match.query.size());
    for (const auto& token : match.query) lists.push_back(&index.text_postings(token));
    PostingList candidates = intersect_all(lists);

    if (match.query.size() == 1) {
      phrase_docs = std::move(candidates);
    } else {
      PostingListBuilder verified;
      for (DocOrdinal d : candidates) {
        auto tokens = index.doc_tokens(d);
        if (std::search(tokens.begin(), tokens.end(), match.query.begin(), match.query.end()) !=
            tokens.end())
          verified.add(d);
      }
      phrase_docs = std::move(verified).build();
    }
  }

  if (auto id = index.find_term(*normalized)) {
    match.matched_docs = unite(phrase_docs, index.term_postings(*id));
  } else {
    match.matched_docs = std::move(phrase_docs);
  }
  return match;
}

PostingList conjunction(const CoIndex& index, const PostingList& base, std::span<const Term> terms) {
  std::vector<const PostingList*> lists{&base};
  lists.reserve(terms.size() + 1);
  for (const auto& t : terms) {
    auto id = index.find_term(t);
    if (!id) return {};
    lists.push_back(&index.term_postings(*id));
  }
  return intersect_all(lists);
}

}  // namespace termheat
