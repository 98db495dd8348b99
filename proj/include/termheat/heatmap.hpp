#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termheat/coindex.hpp"
#include "termheat/recommender.hpp"

namespace termheat {

inline constexpr std::size_t kDefaultSecondOrder = 3;

enum class Band { cold, warm, hot };

const char* band_name(Band band) noexcept;

struct CellColor {
  std::string hex;  // "#RRGGBB", uppercase
  Band band = Band::cold;

  friend bool operator==(const CellColor&, const CellColor&) = default;
};

struct CellValue {
  std::uint64_t count = 0;
  double normalized = 0.0;
  std::string color;
  Band band = Band::cold;

  friend bool operator==(const CellValue&, const CellValue&) = default;
};

// Matrices are indexed [row][column]; nullopt marks a not-applicable cell.
using CountMatrix = std::vector<std::vector<std::optional<std::uint64_t>>>;
using NormalizedMatrix = std::vector<std::vector<std::optional<double>>>;

struct HeatMap {
  std::string query;
  std::vector<Term> scope;
  std::size_t k = kDefaultFirstOrder;
  std::size_t m = kDefaultSecondOrder;
  std::uint64_t query_doc_count = 0;
  std::vector<TermCount> columns;
  std::vector<TermCount> rows;
  std::vector<std::vector<std::optional<CellValue>>> cells;

  friend bool operator==(const HeatMap&, const HeatMap&) = default;
};

/// The m terms co-occurring most often with both `column` and the query
/// documents. Attached counts are those triple counts.
std::vector<TermCount> second_order_terms(const CoIndex& index, const PostingList& query_docs,
                                          const Term& column, std::size_t m,
                                          const std::set<Term>& excluded);

/// Disjoint union of the per-column lists in first-appearance order (columns
/// left to right, each top to bottom). Row counts are recomputed as the
/// term's co-occurrence with the query documents alone.
std::vector<TermCount> assemble_rows(std::span<const std::vector<TermCount>> per_column,
                                     const PostingList& query_docs, const CoIndex& index);

/// cell[i][j] = |query_docs ∩ D(columns[j]) ∩ D(rows[i])|; absent where the
/// row and column are the same term.
CountMatrix cell_counts(const CoIndex& index, const PostingList& query_docs,
                        std::span<const TermCount> columns, std::span<const TermCount> rows);

/// Min-max scaling over present cells. A matrix with a single distinct value
/// maps every present cell to 0.5.
NormalizedMatrix normalize_matrix(const CountMatrix& counts);

/// Blue -> green -> yellow -> red at v = 0, 1/3, 2/3, 1. Channels are rounded
/// half away from zero. cold below 1/3, warm below 2/3, hot above.
/// Throws Error(value_out_of_range) outside [0, 1].
CellColor color_of(double v);

HeatMap build_heatmap(const CoIndex& index, std::string_view q, std::size_t k, std::size_t m,
                      std::span<const Term> scope);

}  // namespace termheat
