#include "termheat/gateway/serialize.hpp"

#include <sstream>

namespace termheat::gateway {
namespace {

Json terms_json(std::span<const Term> terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(t.str());
  return out;
}

Json term_counts_json(std::span<const TermCount> list) {
  Json out = Json::array();
  for (const auto& tc : list) out.push_back(to_json(tc));
  return out;
}

void csv_field(std::ostream& out, const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) {
    out << value;
    return;
  }
  out << '"';
  for (char c : value) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

Json to_json(const TermCount& tc) {
  Json j;
  j["term"] = tc.term.str();
  if (tc.label) j["label"] = *tc.label;
  j["count"] = tc.count;
  return j;
}

Json to_json(const HeatMap& map) {
  Json j;
  j["query"] = map.query;
  j["scope"] = terms_json(map.scope);
  j["k"] = map.k;
  j["m"] = map.m;
  j["query_doc_count"] = map.query_doc_count;
  j["columns"] = term_counts_json(map.columns);
  j["rows"] = term_counts_json(map.rows);
  Json cells = Json::array();
  for (const auto& row : map.cells) {
    Json line = Json::array();
    for (const auto& cell : row) {
      if (!cell) {
        line.push_back(nullptr);
        continue;
      }
      Json c;
      c["count"] = cell->count;
      c["normalized"] = cell->normalized;
      c["color"] = cell->color;
      c["band"] = band_name(cell->band);
      line.push_back(std::move(c));
    }
    cells.push_back(std::move(line));
  }
  j["cells"] = std::move(cells);
  return j;
}

Json to_json(const Recommendation& rec, std::span<const Term> scope, std::size_t k, bool include_self) {
  Json j;
  j["query"] = rec.query;
  j["scope"] = terms_json(scope);
  j["k"] = k;
  j["include_self"] = include_self;
  j["query_doc_count"] = rec.query_doc_count;
  j["first_order"] = term_counts_json(rec.first_order);
  return j;
}

Json to_json(const DocumentPage& page, std::string_view query, std::span<const Term> scope,
             std::span<const Term> selection) {
  Json j;
  j["query"] = std::string(query);
  j["scope"] = terms_json(scope);
  j["terms"] = terms_json(selection);
  j["total"] = page.total;
  j["page"] = page.page;
  j["page_size"] = page.page_size;
  Json items = Json::array();
  for (const auto& item : page.items) {
    Json i;
    i["id"] = item.id;
    i["title"] = item.title;
    i["terms"] = item.terms;
    items.push_back(std::move(i));
  }
  j["items"] = std::move(items);
  return j;
}

Json stats_json(const CoIndex& index) {
  Json j;
  j["doc_count"] = index.doc_count();
  j["vocab_size"] = index.vocab_size();
  return j;
}

std::string render(const Json& body) {
  return body.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string heatmap_csv(const HeatMap& map) {
  std::ostringstream out;
  for (const auto& column : map.columns) {
    out << ',';
    csv_field(out, column.term.str());
  }
  out << '\n';
  for (std::size_t i = 0; i < map.rows.size(); ++i) {
    csv_field(out, map.rows[i].term.str());
    for (const auto& cell : map.cells[i]) {
      out << ',';
      if (cell) out << cell->count;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace termheat::gateway
