#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termheat/coindex.hpp"
#include "termheat/heatmap.hpp"

namespace termheat {

/// Accumulated conjunction of the terms a user has selected, in selection
/// order and without duplicates.
class Scope {
 public:
  Scope() = default;
  explicit Scope(std::span<const Term> terms);

  /// Returns false if the term was already selected.
  bool add(const Term& term);
  Scope extended(std::span<const Term> terms) const;
  bool contains(const Term& term) const;

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const Scope&, const Scope&) = default;

 private:
  std::vector<Term> terms_;
};

struct DocumentItem {
  std::string id;
  std::string title;
  std::vector<std::string> terms;  // display label, or the raw term

  friend bool operator==(const DocumentItem&, const DocumentItem&) = default;
};

struct DocumentPage {
  std::size_t total = 0;
  std::size_t page = 1;
  std::size_t page_size = 20;
  std::vector<DocumentItem> items;
};

/// Documents behind a clicked term ([f]) or cell ([f, g]) within the scope.
/// A page past the end is empty but still reports the full total.
DocumentPage drilldown_documents(const CoIndex& index, std::string_view q, const Scope& scope,
                                 std::span<const Term> selection, std::size_t page,
                                 std::size_t page_size);

struct SessionView {
  Scope scope;
  HeatMap map;
};

/// Narrows the scope by the clicked terms and rebuilds the map. Throws
/// Error(unknown_term) for a clicked term missing from the index.
SessionView adapt(const CoIndex& index, std::string_view q, const Scope& scope,
                  std::span<const Term> clicked, std::size_t k, std::size_t m);

/// Starts over with an empty scope.
SessionView change_query(const CoIndex& index, std::string_view new_q, std::size_t k, std::size_t m);

}  // namespace termheat
