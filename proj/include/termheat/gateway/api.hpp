#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "termheat/coindex.hpp"

namespace termheat::gateway {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> snapshot_path;
  std::optional<std::filesystem::path> corpus_path;
  std::size_t default_k = 10;
  std::size_t default_m = 3;
  std::size_t default_page_size = 20;
  std::optional<std::filesystem::path> assets_dir;

  /// Exactly one index source and positive defaults, else Error(invalid_argument).
  void validate() const;
};

/// Loads the snapshot or builds the corpus named by a validated config.
CoIndex load_index(const ServiceConfig& config);

/// "host:port", ":port" or "port".
void parse_listen_address(const std::string& address, ServiceConfig& config);

using QueryParams = std::multimap<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  std::string body;  // always JSON
};

// Transport-independent request handlers. Malformed parameters and unknown
// scope terms produce 400 with {"error": msg}.
ApiResponse handle_recommend(const CoIndex& index, const QueryParams& params, const ServiceConfig& config);
ApiResponse handle_heatmap(const CoIndex& index, const QueryParams& params, const ServiceConfig& config);
ApiResponse handle_documents(const CoIndex& index, const QueryParams& params, const ServiceConfig& config);
ApiResponse handle_stats(const CoIndex& index);

/// Splits a comma-separated term list and normalizes each entry.
std::vector<Term> parse_term_list(const std::string& csv);

/// Throws Error(unknown_term) for the first term missing from the index.
void require_indexed(const CoIndex& index, std::span<const Term> terms);

}  // namespace termheat::gateway
