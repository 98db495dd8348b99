#include "termheat/session.hpp"

#include <algorithm>

#include "termheat/error.hpp"

namespace termheat {

Scope::Scope(std::span<const Term> terms) {
  for (const auto& t : terms) add(t);
}

bool Scope::add(const Term& term) {
  if (contains(term)) return false;
  terms_.push_back(term);
  return true;
}

Scope Scope::extended(std::span<const Term> terms) const {
  Scope out = *this;
  for (const auto& t : terms) out.add(t);
  return out;
}

bool Scope::contains(const Term& term) const {
  return std::find(terms_.begin(), terms_.end(), term) != terms_.end();
}

DocumentPage drilldown_documents(const CoIndex& index, std::string_view q, const Scope& scope,
                                 std::span<const Term> selection, std::size_t page,
                                 std::size_t page_size) {
  if (page == 0) throw Error(Errc::invalid_argument, "page must be at least 1");
  if (page_size == 0) throw Error(Errc::invalid_argument, "page_size must be at least 1");

  std::vector<Term> filter(scope.terms().begin(), scope.terms().end());
  filter.insert(filter.end(), selection.begin(), selection.end());
  const PostingList docs = conjunction(index, match_query(index, q).matched_docs, filter);

  DocumentPage result;
  result.total = docs.size();
  result.page = page;
  result.page_size = page_size;

  const auto ids = docs.ids();
  const std::size_t first = (page - 1) * page_size;
  if (first / page_size != page - 1 || first >= ids.size()) return result;  // past the end
  const std::size_t last = std::min(ids.size(), first + page_size);
  for (std::size_t i = first; i < last; ++i) {
    const Document& doc = index.document(ids[i]);
    DocumentItem item{doc.id, doc.title, {}};
    for (const auto& raw : doc.terms) {
      auto label = doc.labels.find(raw);
      item.terms.push_back(label != doc.labels.end() ? label->second : raw);
    }
    result.items.push_back(std::move(item));
  }
  return result;
}

SessionView adapt(const CoIndex& index, std::string_view q, const Scope& scope,
                  std::span<const Term> clicked, std::size_t k, std::size_t m) {
  for (const auto& t : clicked) {
    if (!index.find_term(t)) throw Error(Errc::unknown_term, t.str());
  }
  SessionView view{scope.extended(clicked), {}};
  view.map = build_heatmap(index, q, k, m, view.scope.terms());
  return view;
}

SessionView change_query(const CoIndex& index, std::string_view new_q, std::size_t k, std::size_t m) {
  return {Scope{}, build_heatmap(index, new_q, k, m, {})};
}

}  // namespace termheat
