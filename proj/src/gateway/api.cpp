#include "termheat/gateway/api.hpp"

#include <charconv>
#include <fstream>

#include "termheat/error.hpp"
#include "termheat/gateway/serialize.hpp"
#include "termheat/session.hpp"

namespace termheat::gateway {
namespace {

// Upper bound on k, m and page_size accepted from clients.
constexpr std::size_t kMaxParam = 10000;
constexpr std::size_t kMaxPage = 1'000'000'000;

std::optional<std::string> param(const QueryParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::size_t positive_param(const QueryParams& params, const std::string& key, std::size_t fallback,
                           std::size_t max = kMaxParam) {
  auto raw = param(params, key);
  if (!raw) return fallback;
  std::size_t value = 0;
  const char* first = raw->data();
  const char* last = first + raw->size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value == 0 || value > max)
    throw Error(Errc::invalid_argument, key + " must be an integer in [1, " + std::to_string(max) + "]");
  return value;
}

bool flag_param(const QueryParams& params, const std::string& key) {
  auto raw = param(params, key);
  if (!raw) return false;
  if (*raw == "" || *raw == "1" || *raw == "true") return true;
  if (*raw == "0" || *raw == "false") return false;
  throw Error(Errc::invalid_argument, key + " must be true or false");
}

std::string query_param(const QueryParams& params) {
  auto q = param(params, "q");
  if (!q || !try_normalize_term(*q)) throw Error(Errc::empty_query);
  return *q;
}

Scope scope_param(const CoIndex& index, const QueryParams& params) {
  auto raw = param(params, "scope");
  if (!raw) return {};
  auto terms = parse_term_list(*raw);
  require_indexed(index, terms);
  return Scope(terms);
}

ApiResponse error_response(int status, const Error& e) {
  Json body;
  body["error"] = e.what();
  if (!e.detail().empty()) body["detail"] = e.detail();
  return {status, render(body)};
}

template <typename Fn>
ApiResponse guarded(Fn&& fn) {
  try {
    return {200, render(fn())};
  } catch (const Error& e) {
    return error_response(e.code() == Errc::io_error ? 500 : 400, e);
  } catch (const std::exception&) {
    Json body;
    body["error"] = "internal error";
    return {500, render(body)};
  }
}

}  // namespace

void ServiceConfig::validate() const {
  if (snapshot_path.has_value() == corpus_path.has_value())
    throw Error(Errc::invalid_argument, "exactly one of snapshot or corpus must be given");
  if (default_k == 0 || default_m == 0 || default_page_size == 0)
    throw Error(Errc::invalid_argument, "k, m and page_size must be at least 1");
  if (port < 0 || port > 65535) throw Error(Errc::invalid_argument, "port out of range");
}

CoIndex load_index(const ServiceConfig& config) {
  config.validate();
  if (config.snapshot_path) return load_snapshot(*config.snapshot_path);
  std::ifstream in(*config.corpus_path);
  if (!in) throw Error(Errc::io_error, "cannot read " + config.corpus_path->string());
  return build_index(parse_corpus(in).documents);
}

void parse_listen_address(const std::string& address, ServiceConfig& config) {
  const auto colon = address.rfind(':');
  std::string port = address;
  if (colon != std::string::npos) {
    if (colon > 0) config.host = address.substr(0, colon);
    port = address.substr(colon + 1);
  }
  int value = -1;
  auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), value);
  if (ec != std::errc{} || ptr != port.data() + port.size() || value < 0 || value > 65535)
    throw Error(Errc::invalid_argument, "bad listen address \"" + address + "\"");
  config.port = value;
}

std::vector<Term> parse_term_list(const std::string& csv) {
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    if (auto t = try_normalize_term(std::string_view(csv).substr(start, end - start)))
      terms.push_back(std::move(*t));
    start = end + 1;
  }
  return terms;
}

void require_indexed(const CoIndex& index, std::span<const Term> terms) {
  for (const auto& t : terms) {
    if (!index.find_term(t)) throw Error(Errc::unknown_term, t.str());
  }
}

ApiResponse handle_recommend(const CoIndex& index, const QueryParams& params, const ServiceConfig& config) {
  return guarded([&] {
    const std::string q = query_param(params);
    const std::size_t k = positive_param(params, "k", config.default_k);
    const bool include_self = flag_param(params, "include_self");
    const Scope scope = scope_param(index, params);
    auto rec = first_order_terms(index, q, k, scope.terms(), include_self);
    return to_json(rec, scope.terms(), k, include_self);
  });
}

ApiResponse handle_heatmap(const CoIndex& index, const QueryParams& params, const ServiceConfig& config) {
  return guarded([&] {
    const std::string q = query_param(params);
    const std::size_t k = positive_param(params, "k", config.default_k);
    const std::size_t m = positive_param(params, "m", config.default_m);
    const Scope scope = scope_param(index, params);
    return to_json(build_heatmap(index, q, k, m, scope.terms()));
  });
}

ApiResponse handle_documents(const CoIndex& index, const QueryParams& params, const ServiceConfig& config) {
  return guarded([&] {
    const std::string q = query_param(params);
    const Scope scope = scope_param(index, params);
    std::vector<Term> selection;
    if (auto raw = param(params, "terms")) selection = parse_term_list(*raw);
    const std::size_t page = positive_param(params, "page", 1, kMaxPage);
    const std::size_t page_size = positive_param(params, "page_size", config.default_page_size);
    auto result = drilldown_documents(index, q, scope, selection, page, page_size);
    return to_json(result, q, scope.terms(), selection);
  });
}

ApiResponse handle_stats(const CoIndex& index) {
  return guarded([&] { return stats_json(index); });
}

}  // namespace termheat::gateway
