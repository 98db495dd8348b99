#include <fstream>
#include <iterator>

#include <json.hpp>
#include <zlib.h>

#include "record.hpp"
#include "termheat/coindex.hpp"
#include "termheat/error.hpp"

namespace termheat {
namespace {

using Json = nlohmann::ordered_json;

std::string gzip_compress(std::string_view raw) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8, Z_DEFAULT_STRATEGY) != Z_OK)
    throw std::runtime_error("deflateInit2 failed");
  std::string out(deflateBound(&zs, static_cast<uLong>(raw.size())), '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(raw.data()));
  zs.avail_in = static_cast<uInt>(raw.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  out.resize(zs.total_out);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw std::runtime_error("deflate failed");
  return out;
}

std::string gzip_decompress(std::string_view packed) {
  z_stream zs{};
  if (inflateInit2(&zs, 15 + 16) != Z_OK) throw std::runtime_error("inflateInit2 failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(packed.data()));
  zs.avail_in = static_cast<uInt>(packed.size());
  std::string out;
  char buffer[1 << 15];
  int rc = Z_OK;
  while (rc == Z_OK) {
    zs.next_out = reinterpret_cast<Bytef*>(buffer);
    zs.avail_out = sizeof buffer;
    rc = inflate(&zs, Z_NO_FLUSH);
    out.append(buffer, sizeof buffer - zs.avail_out);
  }
  inflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error(Errc::corrupt_snapshot, "truncated gzip stream");
  return out;
}

bool is_gzip(std::string_view bytes) {
  return bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
         static_cast<unsigned char>(bytes[1]) == 0x8b;
}

Json postings_json(const PostingList& list) {
  return Json(std::vector<DocOrdinal>(list.begin(), list.end()));
}

[[noreturn]] void corrupt(std::string why) { throw Error(Errc::corrupt_snapshot, std::move(why)); }

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) corrupt(std::string("missing ") + key);
  return *it;
}

// Keys must already be canonical; anything else means the file was edited.
Term canonical_key(const std::string& raw) {
  auto t = try_normalize_term(raw);
  if (!t || t->str() != raw) corrupt("non-canonical term \"" + raw + "\"");
  return *t;
}

PostingList read_postings(const Json& j, std::size_t doc_count) {
  if (!j.is_array() || j.empty()) corrupt("posting list must be a non-empty array");
  std::vector<DocOrdinal> ids;
  ids.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= doc_count) corrupt("bad ordinal");
    ids.push_back(v.get<DocOrdinal>());
  }
  try {
    return PostingList(std::move(ids));
  } catch (const Error&) {
    corrupt("posting list not strictly ascending");
  }
}

}  // namespace

std::string encode_snapshot(const CoIndex& index, bool gzip) {
  Json j;
  j["version"] = kSnapshotVersion;
  j["doc_count"] = index.doc_count();
  Json vocab = Json::array();
  Json term_postings = Json::object();
  for (TermId id = 0; id < index.vocab_size(); ++id) {
    vocab.push_back(index.term(id).str());
    term_postings[index.term(id).str()] = postings_json(index.term_postings(id));
  }
  j["vocab"] = std::move(vocab);
  j["term_postings"] = std::move(term_postings);
  Json text_postings = Json::object();
  for (const auto& [token, list] : index.all_text_postings()) text_postings[token.str()] = postings_json(list);
  j["text_postings"] = std::move(text_postings);
  Json docs = Json::array();
  for (const auto& doc : index.documents()) docs.push_back(detail::document_to_json(doc));
  j["docs"] = std::move(docs);

  std::string text = j.dump();
  return gzip ? gzip_compress(text) : text;
}

CoIndex decode_snapshot(std::string_view bytes) {
  std::string inflated;
  if (is_gzip(bytes)) {
    inflated = gzip_decompress(bytes);
    bytes = inflated;
  }

  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::parse_error&) {
    corrupt("unparseable JSON");
  }
  if (!j.is_object()) corrupt("top level is not an object");

  auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer() || version->get<std::int64_t>() != kSnapshotVersion)
    throw Error(Errc::unsupported_snapshot_version, version == j.end() ? "missing" : version->dump());

  CoIndex index;
  const Json& doc_count = member(j, "doc_count");
  const Json& docs = member(j, "docs");
  if (!doc_count.is_number_unsigned() || !docs.is_array() || docs.size() != doc_count.get<std::size_t>())
    corrupt("doc_count does not match docs");
  for (const auto& d : docs) {
    try {
      index.docs_.push_back(detail::document_from_json(d));
    } catch (const detail::RecordError& e) {
      corrupt("bad document: " + e.reason);
    }
  }
  const std::size_t n = index.docs_.size();

  const Json& vocab = member(j, "vocab");
  const Json& term_postings = member(j, "term_postings");
  if (!vocab.is_array() || !term_postings.is_object() || vocab.size() != term_postings.size())
    corrupt("vocab does not match term_postings");
  for (const auto& v : vocab) {
    if (!v.is_string()) corrupt("vocab entry is not a string");
    Term t = canonical_key(v.get<std::string>());
    if (!index.vocab_.empty() && !(index.vocab_.back() < t)) corrupt("vocab not sorted");
    auto postings = term_postings.find(t.str());
    if (postings == term_postings.end()) corrupt("no postings for \"" + t.str() + "\"");
    index.term_postings_.push_back(read_postings(*postings, n));
    index.vocab_.push_back(std::move(t));
  }

  const Json& text_postings = member(j, "text_postings");
  if (!text_postings.is_object()) corrupt("text_postings is not an object");
  for (const auto& [token, list] : text_postings.items()) {
    index.text_postings_.emplace(canonical_key(token), read_postings(list, n));
  }

  index.derive_tables();

  for (DocOrdinal d = 0; d < n; ++d) {
    auto expected = normalized_terms(index.docs_[d]);
    auto ids = index.doc_terms(d);
    if (expected.size() != ids.size() ||
        !std::equal(ids.begin(), ids.end(), expected.begin(),
                    [&](TermId id, const Term& t) { return index.term(id) == t; }))
      corrupt("postings disagree with document " + index.docs_[d].id);
  }
  return index;
}

void save_snapshot(const CoIndex& index, const std::filesystem::path& destination, bool gzip) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + destination.string());
  const std::string bytes = encode_snapshot(index, gzip);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw Error(Errc::io_error, "cannot write " + destination.string());
}

CoIndex load_snapshot(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read " + source.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

}  // namespace termheat
