#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termheat/coindex.hpp"

namespace termheat {

inline constexpr std::size_t kDefaultFirstOrder = 10;

struct TermCount {
  Term term;
  std::optional<std::string> label;
  std::uint64_t count = 0;

  friend bool operator==(const TermCount&, const TermCount&) = default;
};

/// count descending, then term ascending.
bool ranks_before(const TermCount& a, const TermCount& b) noexcept;

struct Recommendation {
  std::string query;
  std::uint64_t query_doc_count = 0;
  std::vector<TermCount> first_order;
};

/// Top `limit` indexing terms by document co-occurrence with `docs`, ranked
/// by ranks_before. Terms whose id is flagged in `excluded` (indexed by
/// TermId) and terms with zero co-occurrence are skipped.
std::vector<TermCount> top_cooccurring(const CoIndex& index, const PostingList& docs,
                                       std::size_t limit, const std::vector<bool>& excluded);

/// Documents matching q, narrowed by every scope term.
PostingList scoped_documents(const CoIndex& index, std::string_view q, std::span<const Term> scope);

/// Search term recommendations: the k indexing terms that co-occur most often
/// with the query inside the scope. Scope terms and, unless include_self is
/// set, the query's own normalized form are never recommended.
Recommendation first_order_terms(const CoIndex& index, std::string_view q, std::size_t k,
                                 std::span<const Term> scope, bool include_self = false);

}  // namespace termheat
