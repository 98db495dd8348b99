#include "termheat/heatmap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "termheat/error.hpp"

namespace termheat {
namespace {

std::vector<bool> exclusion_mask(const CoIndex& index, const std::set<Term>& terms) {
  std::vector<bool> mask(index.vocab_size(), false);
  for (const auto& t : terms) {
    if (auto id = index.find_term(t)) mask[*id] = true;
  }
  return mask;
}

std::uint64_t pair_count(const CoIndex& index, const PostingList& docs, const Term& term) {
  auto id = index.find_term(term);
  return id ? intersection_size(docs, index.term_postings(*id)) : 0;
}

}  // namespace

const char* band_name(Band band) noexcept {
  switch (band) {
    case Band::cold: return "cold";
    case Band::warm: return "warm";
    case Band::hot: return "hot";
  }
  return "cold";
}

std::vector<TermCount> second_order_terms(const CoIndex& index, const PostingList& query_docs,
                                          const Term& column, std::size_t m,
                                          const std::set<Term>& excluded) {
  if (m == 0) throw Error(Errc::invalid_argument, "m must be at least 1");
  auto column_id = index.find_term(column);
  if (!column_id) return {};
  const PostingList docs = intersect(query_docs, index.term_postings(*column_id));
  auto mask = exclusion_mask(index, excluded);
  mask[*column_id] = true;
  return top_cooccurring(index, docs, m, mask);
}

std::vector<TermCount> assemble_rows(std::span<const std::vector<TermCount>> per_column,
                                     const PostingList& query_docs, const CoIndex& index) {
  std::vector<TermCount> rows;
  std::set<Term> seen;
  for (const auto& column : per_column) {
    for (const auto& tc : column) {
      if (!seen.insert(tc.term).second) continue;
      rows.push_back({tc.term, tc.label, pair_count(index, query_docs, tc.term)});
    }
  }
  return rows;
}

CountMatrix cell_counts(const CoIndex& index, const PostingList& query_docs,
                        std::span<const TermCount> columns, std::span<const TermCount> rows) {
  CountMatrix counts(rows.size(), std::vector<std::optional<std::uint64_t>>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Term& column = columns[j].term;
    const PostingList column_docs = conjunction(index, query_docs, std::span(&column, 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].term == column) continue;
      counts[i][j] = pair_count(index, column_docs, rows[i].term);
    }
  }
  return counts;
}

NormalizedMatrix normalize_matrix(const CountMatrix& counts) {
  std::optional<std::uint64_t> lo;
  std::optional<std::uint64_t> hi;
  for (const auto& row : counts) {
    for (const auto& c : row) {
      if (!c) continue;
      lo = lo ? std::min(*lo, *c) : *c;
      hi = hi ? std::max(*hi, *c) : *c;
    }
  }

  NormalizedMatrix out;
  out.reserve(counts.size());
  for (const auto& row : counts) {
    auto& dst = out.emplace_back(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j]) continue;
      if (*hi == *lo) {
        dst[j] = 0.5;
      } else {
        dst[j] = static_cast<double>(*row[j] - *lo) / static_cast<double>(*hi - *lo);
      }
    }
  }
  return out;
}

CellColor color_of(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw Error(Errc::value_out_of_range, std::to_string(v));

  // blue, green, yellow, red
  static constexpr std::array<std::array<double, 3>, 4> kStops = {{
      {0, 0, 255},
      {0, 255, 0},
      {255, 255, 0},
      {255, 0, 0},
  }};
  const double scaled = v * 3.0;
  const int segment = std::min(static_cast<int>(scaled), 2);
  const double t = scaled - segment;

  // v is normally a ratio of counts that binary floating point cannot hold
  // exactly (0.3 is stored as 0.29999...), so a channel that should be an
  // exact half can land a hair below it. Channel values of genuine ratios
  // a/b sit at least 1/(2b) away from a half, so snapping within kHalfSlack
  // is exact for every count range below 5e8.
  constexpr double kHalfSlack = 1e-9;
  std::array<int, 3> rgb{};
  for (std::size_t c = 0; c < 3; ++c) {
    const double from = kStops[segment][c];
    const double to = kStops[segment + 1][c];
    const double x = from + (to - from) * t;  // within [0, 255]
    rgb[c] = static_cast<int>(std::floor(x + 0.5 + kHalfSlack));
  }
  char hex[8];
  std::snprintf(hex, sizeof hex, "#%02X%02X%02X", rgb[0], rgb[1], rgb[2]);

  Band band = Band::hot;
  if (v < 1.0 / 3.0) {
    band = Band::cold;
  } else if (v < 2.0 / 3.0) {
    band = Band::warm;
  }
  return {hex, band};
}

HeatMap build_heatmap(const CoIndex& index, std::string_view q, std::size_t k, std::size_t m,
                      std::span<const Term> scope) {
  if (k == 0) throw Error(Errc::invalid_argument, "k must be at least 1");
  if (m == 0) throw Error(Errc::invalid_argument, "m must be at least 1");

  HeatMap map;
  map.query = std::string(q);
  map.scope.assign(scope.begin(), scope.end());
  map.k = k;
  map.m = m;

  const PostingList docs = scoped_documents(index, q, scope);
  map.query_doc_count = docs.size();

  std::set<Term> excluded(scope.begin(), scope.end());
  excluded.insert(normalize_term(q));
  map.columns = top_cooccurring(index, docs, k, exclusion_mask(index, excluded));

  std::vector<std::vector<TermCount>> per_column;
  per_column.reserve(map.columns.size());
  for (const auto& column : map.columns) {
    per_column.push_back(second_order_terms(index, docs, column.term, m, excluded));
  }
  map.rows = assemble_rows(per_column, docs, index);

  const CountMatrix counts = cell_counts(index, docs, map.columns, map.rows);
  const NormalizedMatrix normalized = normalize_matrix(counts);
  map.cells.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    map.cells[i].resize(counts[i].size());
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      if (!counts[i][j]) continue;
      CellColor color = color_of(*normalized[i][j]);
      map.cells[i][j] = CellValue{*counts[i][j], *normalized[i][j], std::move(color.hex), color.band};
    }
  }
  return map;
}

}  // namespace termheat
