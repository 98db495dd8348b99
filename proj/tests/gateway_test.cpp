#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "support/tiny5.hpp"
#include "termheat/error.hpp"
#include "termheat/gateway/api.hpp"
#include "termheat/gateway/cli.hpp"
#include "termheat/gateway/serialize.hpp"
#include "termheat/gateway/service.hpp"

using namespace termheat;
using namespace termheat::gateway;

namespace {

const std::filesystem::path kFixtures = TERMHEAT_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("termheat_gateway_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

QueryParams params(std::initializer_list<std::pair<const std::string, std::string>> kv) { return kv; }

// A live service on an ephemeral port for the duration of a test.
class LiveService {
 public:
  explicit LiveService(std::shared_ptr<const CoIndex> index) {
    ServiceConfig config;
    config.port = 0;
    config.snapshot_path = "unused";
    service_ = std::make_unique<Service>(config, std::move(index));
    port_ = service_->bind();
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { service_->listen_after_bind(); });
    service_->wait_until_ready();
  }
  ~LiveService() {
    service_->stop();
    thread_.join();
  }
  Service& service() { return *service_; }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

 private:
  std::unique_ptr<Service> service_;
  int port_ = -1;
  std::thread thread_;
};

}  // namespace

TEST_CASE("heat map JSON serialization is the golden fixture") {
  const auto index = build_index(testing::tiny5());
  const auto body = render(to_json(build_heatmap(index, "violence", 2, 2, {})));
  CHECK(body == slurp(kFixtures / "tiny5_heatmap_violence_k2_m2.json"));
}

TEST_CASE("labels serialize only when present") {
  const TermCount plain{normalize_term("a"), std::nullopt, 3};
  const TermCount labelled{normalize_term("gewalt"), std::string("Violence"), 5};
  CHECK(to_json(plain).dump() == R"({"term":"a","count":3})");
  CHECK(to_json(labelled).dump() == R"({"term":"gewalt","label":"Violence","count":5})");
}

TEST_CASE("heat map CSV") {
  const auto index = build_index(testing::tiny5());
  CHECK(heatmap_csv(build_heatmap(index, "violence", 2, 2, {})) == ",a,b\nb,2,\nc,2,1\na,,2\n");
  CHECK(heatmap_csv(build_heatmap(index, "unseen", 2, 2, {})) == "\n");

  auto parsed = parse_corpus(R"({"id":"1","title":"x","terms":["say \"hi\", now","other"]})" "\n");
  const auto quoted = build_index(parsed.documents);
  const auto csv = heatmap_csv(build_heatmap(quoted, "x", 2, 2, {}));
  CHECK(csv.find("\"say \"\"hi\"\", now\"") != std::string::npos);
}

TEST_CASE("api handlers") {
  const auto index = build_index(testing::tiny5());
  const ServiceConfig config;

  SUBCASE("heatmap") {
    auto ok = handle_heatmap(index, params({{"q", "violence"}, {"k", "2"}, {"m", "2"}}), config);
    CHECK(ok.status == 200);
    CHECK(ok.body == slurp(kFixtures / "tiny5_heatmap_violence_k2_m2.json"));

    auto missing = handle_heatmap(index, {}, config);
    CHECK(missing.status == 400);
    CHECK(missing.body == "{\"error\":\"empty query\"}\n");

    auto bad_k = handle_heatmap(index, params({{"q", "violence"}, {"k", "0"}}), config);
    CHECK(bad_k.status == 400);
    CHECK(handle_heatmap(index, params({{"q", "violence"}, {"m", "x"}}), config).status == 400);
    CHECK(handle_heatmap(index, params({{"q", "violence"}, {"k", "3abc"}}), config).status == 400);

    auto unknown = handle_heatmap(index, params({{"q", "violence"}, {"scope", "a,zzz"}}), config);
    CHECK(unknown.status == 400);
    CHECK(unknown.body == "{\"error\":\"unknown term\",\"detail\":\"zzz\"}\n");

    auto scoped = handle_heatmap(index, params({{"q", "violence"}, {"scope", " A ,,a"}}), config);
    CHECK(scoped.status == 200);
    CHECK(scoped.body.find("\"scope\":[\"a\"]") != std::string::npos);
  }

  SUBCASE("recommend") {
    auto rec = handle_recommend(index, params({{"q", "violence"}, {"k", "3"}}), config);
    CHECK(rec.status == 200);
    CHECK(rec.body ==
          R"({"query":"violence","scope":[],"k":3,"include_self":false,"query_doc_count":4,)"
          R"("first_order":[{"term":"a","count":4},{"term":"b","count":2},{"term":"c","count":2}]})"
          "\n");
    auto self = handle_recommend(index, params({{"q", "a"}, {"include_self", "true"}}), config);
    CHECK(self.body.find(R"({"term":"a","count":4})") != std::string::npos);
    CHECK(handle_recommend(index, params({{"q", "a"}, {"include_self", "maybe"}}), config).status == 400);
  }

  SUBCASE("documents") {
    auto docs = handle_documents(index, params({{"q", "violence"}, {"terms", "a,b"}, {"page", "1"}}), config);
    CHECK(docs.status == 200);
    CHECK(docs.body ==
          R"({"query":"violence","scope":[],"terms":["a","b"],"total":2,"page":1,"page_size":20,"items":[)"
          R"({"id":"d1","title":"violence report","terms":["A","B","C"]},)"
          R"({"id":"d2","title":"violence study","terms":["A","B"]}]})"
          "\n");
    // Unknown selection terms are an empty result, unknown scope terms an error.
    auto empty = handle_documents(index, params({{"q", "violence"}, {"terms", "zzz"}}), config);
    CHECK(empty.status == 200);
    CHECK(empty.body.find("\"total\":0") != std::string::npos);
    CHECK(handle_documents(index, params({{"q", "violence"}, {"scope", "zzz"}}), config).status == 400);
    CHECK(handle_documents(index, params({{"q", "violence"}, {"page", "0"}}), config).status == 400);
  }

  SUBCASE("stats") {
    CHECK(handle_stats(index).body == "{\"doc_count\":5,\"vocab_size\":3}\n");
  }
}

TEST_CASE("service config") {
  ServiceConfig config;
  CHECK_THROWS_AS(config.validate(), Error);
  config.snapshot_path = "x";
  CHECK_NOTHROW(config.validate());
  config.corpus_path = "y";
  CHECK_THROWS_AS(config.validate(), Error);
  config.corpus_path.reset();
  config.default_m = 0;
  CHECK_THROWS_AS(config.validate(), Error);

  ServiceConfig listen;
  parse_listen_address("0.0.0.0:9000", listen);
  CHECK(listen.host == "0.0.0.0");
  CHECK(listen.port == 9000);
  parse_listen_address(":0", listen);
  CHECK(listen.port == 0);
  CHECK_THROWS_AS(parse_listen_address("host:http", listen), Error);
}

TEST_CASE("cli") {
  TempDir dir;
  const auto snap = (dir / "tiny5.snap").string();

  SUBCASE("index, heatmap and recommend") {
    auto built = cli({"index", "--corpus", (kFixtures / "tiny5.jsonl").string(), "--out", snap});
    CHECK(built.code == 0);
    CHECK(built.out == "5 documents, 3 terms, 0 rejected\n");

    auto json = cli({"heatmap", "--index", snap, "--query", "violence", "--k", "2", "--m", "2", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out == slurp(kFixtures / "tiny5_heatmap_violence_k2_m2.json"));

    auto csv = cli({"heatmap", "--index", snap, "--query", "violence", "--k", "2", "--m", "2", "--format", "csv"});
    CHECK(csv.out == ",a,b\nb,2,\nc,2,1\na,,2\n");

    auto empty = cli({"heatmap", "--index", snap, "--query", "unseen"});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("\"columns\":[],\"rows\":[],\"cells\":[]") != std::string::npos);

    auto xml = cli({"heatmap", "--index", snap, "--query", "violence", "--format", "xml"});
    CHECK(xml.code == 2);

    auto rec = cli({"recommend", "--index", snap, "--query", "A", "--include-self"});
    CHECK(rec.code == 0);
    CHECK(rec.out.find("\"include_self\":true") != std::string::npos);
    CHECK(rec.out.find(R"({"term":"a","count":4})") != std::string::npos);

    auto scoped = cli({"heatmap", "--index", snap, "--query", "violence", "--scope", "zzz"});
    CHECK(scoped.code == 2);
    CHECK(scoped.err.find("unknown term") != std::string::npos);

    auto blank = cli({"heatmap", "--index", snap, "--query", " "});
    CHECK(blank.code == 2);
    CHECK(blank.err.find("empty query") != std::string::npos);
  }

  SUBCASE("gzip snapshots by suffix") {
    const auto gz = (dir / "tiny5.snap.gz").string();
    CHECK(cli({"index", "--corpus", (kFixtures / "tiny5.jsonl").string(), "--out", gz}).code == 0);
    CHECK(static_cast<unsigned char>(slurp(gz)[0]) == 0x1f);
    auto json = cli({"heatmap", "--index", gz, "--query", "violence", "--k", "2", "--m", "2"});
    CHECK(json.out == slurp(kFixtures / "tiny5_heatmap_violence_k2_m2.json"));
  }

  SUBCASE("empty and missing corpora") {
    const auto empty_corpus = dir / "empty.jsonl";
    std::ofstream(empty_corpus).close();
    auto empty = cli({"index", "--corpus", empty_corpus.string(), "--out", snap});
    CHECK(empty.code == 0);
    CHECK(empty.out == "0 documents, 0 terms, 0 rejected\n");

    const auto junk = dir / "junk.jsonl";
    std::ofstream(junk) << "nope\n{}\n";
    auto rejected = cli({"index", "--corpus", junk.string(), "--out", snap});
    CHECK(rejected.code == 0);
    CHECK(rejected.out == "0 documents, 0 terms, 2 rejected\n");
    CHECK(rejected.err.find("warning") != std::string::npos);

    auto missing = cli({"index", "--corpus", (dir / "missing.jsonl").string(), "--out", snap});
    CHECK(missing.code == 2);
    CHECK(missing.out.empty());
    CHECK_FALSE(missing.err.empty());
  }

  SUBCASE("usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"heatmap", "--query", "x"}).code == 2);
    CHECK(cli({"heatmap", "--index", "/nonexistent", "--query", "x"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
  }
}

TEST_CASE("http service") {
  auto index = std::make_shared<const CoIndex>(build_index(testing::tiny5()));
  LiveService live(index);
  auto client = live.client();
  const std::string golden = slurp(kFixtures / "tiny5_heatmap_violence_k2_m2.json");

  auto heat = client.Get("/api/heatmap?q=violence&k=2&m=2");
  REQUIRE(heat);
  CHECK(heat->status == 200);
  CHECK(heat->body == golden);
  CHECK(heat->get_header_value("Content-Type") == "application/json");

  auto missing = client.Get("/api/heatmap");
  REQUIRE(missing);
  CHECK(missing->status == 400);
  CHECK(missing->body == "{\"error\":\"empty query\"}\n");

  auto docs = client.Get("/api/documents?q=violence&terms=a,b&page=1");
  REQUIRE(docs);
  CHECK(docs->status == 200);
  CHECK(docs->body.find("\"total\":2") != std::string::npos);

  auto stats = client.Get("/api/stats");
  REQUIRE(stats);
  CHECK(stats->body == "{\"doc_count\":5,\"vocab_size\":3}\n");

  auto scope = client.Get("/api/heatmap?q=violence&scope=zzz");
  REQUIRE(scope);
  CHECK(scope->status == 400);

  auto root = client.Get("/");
  REQUIRE(root);
  CHECK(root->status == 200);

  auto post = client.Post("/api/heatmap?q=violence", "", "application/json");
  REQUIRE(post);
  CHECK(post->status != 200);

  SUBCASE("ten concurrent identical requests return identical bodies") {
    std::vector<std::future<std::string>> replies;
    for (int i = 0; i < 10; ++i) {
      replies.push_back(std::async(std::launch::async, [&live] {
        auto c = live.client();
        auto r = c.Get("/api/heatmap?q=violence&k=2&m=2");
        return r ? r->body : std::string("request failed");
      }));
    }
    for (auto& f : replies) CHECK(f.get() == golden);
  }

  SUBCASE("reload swaps the whole index") {
    auto other = parse_corpus(R"({"id":"z","title":"violence","terms":["Q"]})" "\n");
    live.service().reload(std::make_shared<const CoIndex>(build_index(other.documents)));
    auto after = client.Get("/api/stats");
    REQUIRE(after);
    CHECK(after->body == "{\"doc_count\":1,\"vocab_size\":1}\n");
  }
}
