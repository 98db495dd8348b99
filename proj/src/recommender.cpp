#include "termheat/recommender.hpp"

#include <algorithm>

#include "termheat/error.hpp"

namespace termheat {

bool ranks_before(const TermCount& a, const TermCount& b) noexcept {
  if (a.count != b.count) return a.count > b.count;
  return a.term < b.term;
}

std::vector<TermCount> top_cooccurring(const CoIndex& index, const PostingList& docs,
                                       std::size_t limit, const std::vector<bool>& excluded) {
  // One pass over the documents' term lists tallies every candidate at once,
  // instead of one posting intersection per vocabulary term.
  std::vector<std::uint64_t> tally(index.vocab_size(), 0);
  for (DocOrdinal d : docs) {
    for (TermId id : index.doc_terms(d)) ++tally[id];
  }

  std::vector<TermId> candidates;
  for (TermId id = 0; id < tally.size(); ++id) {
    if (tally[id] > 0 && !(id < excluded.size() && excluded[id])) candidates.push_back(id);
  }
  // Ids are in term order, so the id breaks count ties lexicographically.
  auto better = [&](TermId a, TermId b) {
    return tally[a] != tally[b] ? tally[a] > tally[b] : a < b;
  };
  const std::size_t n = std::min(limit, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(n),
                    candidates.end(), better);

  std::vector<TermCount> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const TermId id = candidates[i];
    out.push_back({index.term(id), index.label(id), tally[id]});
  }
  return out;
}

PostingList scoped_documents(const CoIndex& index, std::string_view q, std::span<const Term> scope) {
  return conjunction(index, match_query(index, q).matched_docs, scope);
}

Recommendation first_order_terms(const CoIndex& index, std::string_view q, std::size_t k,
                                 std::span<const Term> scope, bool include_self) {
  if (k == 0) throw Error(Errc::invalid_argument, "k must be at least 1");
  const PostingList docs = scoped_documents(index, q, scope);

  std::vector<bool> excluded(index.vocab_size(), false);
  for (const auto& t : scope) {
    if (auto id = index.find_term(t)) excluded[*id] = true;
  }
  if (!include_self) {
    if (auto id = index.find_term(normalize_term(q))) excluded[*id] = true;
  }

  Recommendation rec;
  rec.query = std::string(q);
  rec.query_doc_count = docs.size();
  rec.first_order = top_cooccurring(index, docs, k, excluded);
  return rec;
}

}  // namespace termheat
