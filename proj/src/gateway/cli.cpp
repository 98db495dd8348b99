#include "termheat/gateway/cli.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "termheat/error.hpp"
#include "termheat/gateway/api.hpp"
#include "termheat/gateway/serialize.hpp"
#include "termheat/gateway/service.hpp"
#include "termheat/session.hpp"

namespace termheat::gateway {
namespace {

std::atomic<int> pending_signal{0};

extern "C" void record_signal(int sig) { pending_signal.store(sig); }

struct IndexArgs {
  std::string corpus;
  std::string out;
  bool gzip = false;
};

struct QueryArgs {
  std::string index;
  std::string query;
  std::size_t k = kDefaultFirstOrder;
  std::size_t m = kDefaultSecondOrder;
  std::string scope;
  std::string format = "json";
  bool include_self = false;
};

struct ServeArgs {
  std::string index;
  std::string corpus;
  std::string listen = "127.0.0.1:8080";
  std::string assets;
  std::size_t k = kDefaultFirstOrder;
  std::size_t m = kDefaultSecondOrder;
  std::size_t page_size = 20;
};

int run_index(const IndexArgs& args, std::ostream& out, std::ostream& err) {
  std::ifstream in(args.corpus);
  if (!in) {
    err << "error: cannot read corpus " << args.corpus << '\n';
    return 2;
  }
  ParseResult parsed = parse_corpus(in);
  for (const auto& r : parsed.rejections) err << "warning: " << r.to_string() << '\n';
  if (parsed.documents.documents.empty() && !parsed.rejections.empty())
    err << "warning: every record was rejected; writing an empty index\n";

  const CoIndex index = build_index(parsed.documents);
  const bool gzip = args.gzip || args.out.ends_with(".gz");
  save_snapshot(index, args.out, gzip);
  out << index.doc_count() << " documents, " << index.vocab_size() << " terms, "
      << parsed.rejections.size() << " rejected\n";
  return 0;
}

std::vector<Term> checked_scope(const CoIndex& index, const std::string& raw) {
  Scope scope(parse_term_list(raw));
  require_indexed(index, scope.terms());
  return {scope.terms().begin(), scope.terms().end()};
}

int run_recommend(const QueryArgs& args, std::ostream& out) {
  const CoIndex index = load_snapshot(args.index);
  const auto scope = checked_scope(index, args.scope);
  const auto rec = first_order_terms(index, args.query, args.k, scope, args.include_self);
  out << render(to_json(rec, scope, args.k, args.include_self));
  return 0;
}

int run_heatmap(const QueryArgs& args, std::ostream& out) {
  const CoIndex index = load_snapshot(args.index);
  const auto scope = checked_scope(index, args.scope);
  const HeatMap map = build_heatmap(index, args.query, args.k, args.m, scope);
  out << (args.format == "csv" ? heatmap_csv(map) : render(to_json(map)));
  return 0;
}

int run_serve(const ServeArgs& args, std::ostream& out, std::ostream& err) {
  ServiceConfig config;
  if (!args.index.empty()) config.snapshot_path = args.index;
  if (!args.corpus.empty()) config.corpus_path = args.corpus;
  if (!args.assets.empty()) config.assets_dir = args.assets;
  config.default_k = args.k;
  config.default_m = args.m;
  config.default_page_size = args.page_size;
  parse_listen_address(args.listen, config);
  config.validate();

  Service service(config, std::make_shared<const CoIndex>(load_index(config)));
  const int port = service.bind();
  if (port < 0) {
    err << "error: cannot listen on " << args.listen << '\n';
    return 2;
  }
  out << "listening on " << config.host << ':' << port << std::endl;

  pending_signal.store(0);
  std::signal(SIGHUP, record_signal);
  std::signal(SIGINT, record_signal);
  std::signal(SIGTERM, record_signal);

  // SIGHUP reloads the snapshot; each request keeps the version it started with.
  std::jthread watcher([&](std::stop_token stop) {
    while (!stop.stop_requested()) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      const int sig = pending_signal.exchange(0);
      if (sig == SIGHUP) {
        try {
          service.reload(std::make_shared<const CoIndex>(load_index(config)));
          err << "reloaded index\n";
        } catch (const std::exception& e) {
          err << "warning: reload failed, keeping current index: " << e.what() << '\n';
        }
      } else if (sig == SIGINT || sig == SIGTERM) {
        service.stop();
        return;
      }
    }
  });
  service.listen_after_bind();
  watcher.request_stop();
  return 0;
}

void add_query_options(CLI::App& cmd, QueryArgs& args) {
  cmd.add_option("--index", args.index, "Snapshot written by `termheat index`")->required();
  cmd.add_option("--query", args.query, "Free-text search term")->required();
  cmd.add_option("--k", args.k, "Number of first-order terms")->check(CLI::PositiveNumber);
  cmd.add_option("--scope", args.scope, "Comma-separated scope terms");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"termheat: co-word heat maps over a controlled indexing vocabulary", "termheat"};
  app.require_subcommand(1);

  IndexArgs index_args;
  auto* index_cmd = app.add_subcommand("index", "Build a snapshot from a JSONL corpus");
  index_cmd->add_option("--corpus", index_args.corpus, "JSONL corpus")->required();
  index_cmd->add_option("--out", index_args.out, "Snapshot path (.gz compresses)")->required();
  index_cmd->add_flag("--gzip", index_args.gzip, "Compress the snapshot");

  QueryArgs recommend_args;
  auto* recommend_cmd = app.add_subcommand("recommend", "First-order term recommendations");
  add_query_options(*recommend_cmd, recommend_args);
  recommend_cmd->add_flag("--include-self", recommend_args.include_self,
                          "Keep the query's own indexing term in the list");

  QueryArgs heatmap_args;
  auto* heatmap_cmd = app.add_subcommand("heatmap", "Co-word heat map for a query");
  add_query_options(*heatmap_cmd, heatmap_args);
  heatmap_cmd->add_option("--m", heatmap_args.m, "Second-order terms per column")->check(CLI::PositiveNumber);
  heatmap_cmd->add_option("--format", heatmap_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
  auto* serve_index = serve_cmd->add_option("--index", serve_args.index, "Snapshot to serve");
  auto* serve_corpus = serve_cmd->add_option("--corpus", serve_args.corpus, "Corpus to index at startup");
  serve_index->excludes(serve_corpus);
  serve_cmd->add_option("--listen", serve_args.listen, "host:port (port 0 picks a free one)");
  serve_cmd->add_option("--assets", serve_args.assets, "Web UI bundle served at /");
  serve_cmd->add_option("--k", serve_args.k, "Default k")->check(CLI::PositiveNumber);
  serve_cmd->add_option("--m", serve_args.m, "Default m")->check(CLI::PositiveNumber);
  serve_cmd->add_option("--page-size", serve_args.page_size, "Default page size")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (index_cmd->parsed()) return run_index(index_args, out, err);
    if (recommend_cmd->parsed()) return run_recommend(recommend_args, out);
    if (heatmap_cmd->parsed()) return run_heatmap(heatmap_args, out);
    if (serve_cmd->parsed()) return run_serve(serve_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!e.detail().empty()) err << ": " << e.detail();
    err << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace termheat::gateway
