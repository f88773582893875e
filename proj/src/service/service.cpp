// Copyright 2026 The cryptext Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "io_util.hpp"
#include "cryptext/error.hpp"
#include "cryptext/perturb.hpp"
#include "cryptext/query.hpp"
#include "cryptext/serialize.hpp"
#include "cryptext/service.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext::service {
namespace {

using wire::Json;

constexpr int kMaxLevel = 16;
constexpr long long kMaxDistance = 64;
constexpr long long kMaxTopN = 100;
constexpr int kDefaultLevel = 1;

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyToken:
    case ErrorCode::kLevelMismatch:
    case ErrorCode::kMalformedDocument:
    case ErrorCode::kRatioOutOfRange:
    case ErrorCode::kUnparseableTimestamp:
    case ErrorCode::kEmptyVariantSet:
    case ErrorCode::kInvalidArgument:
      return 400;
    case ErrorCode::kUnauthorized: return 401;
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kMethodNotAllowed: return 405;
    case ErrorCode::kPayloadTooLarge: return 413;
    case ErrorCode::kUnavailable: return 503;
    default: return 500;
  }
}

Response error_response(ErrorCode code, std::string_view message) {
  return {status_for(code), wire::dump(wire::error_body(code, message)), "application/json", {}};
}

Response json_response(const Json& body) {
  return {200, wire::dump(body), "application/json", {}};
}

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

// Length-prefixed fields, so no choice of parameter text can make two
// different requests share a key.
class KeyBuilder {
 public:
  KeyBuilder(std::string_view route, std::uint64_t generation) {
    add(route).add(std::to_string(generation));
  }
  KeyBuilder& add(std::string_view field) {
    key_ += std::to_string(field.size());
    key_ += ':';
    key_ += field;
    return *this;
  }
  template <typename T>
  KeyBuilder& num(T value) {
    return add(std::to_string(value));
  }
  std::string str() && { return std::move(key_); }

 private:
  std::string key_;
};

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Query-string access with strict validation.
class Params {
 public:
  explicit Params(const std::multimap<std::string, std::string>& params) : params_(params) {
    for (const auto& [name, value] : params_) {
      if (!utf8::is_valid(name) || !utf8::is_valid(value)) {
        bad("query parameters must be valid UTF-8");
      }
    }
  }

  std::optional<std::string> get(const std::string& name) const {
    const auto it = params_.find(name);
    if (it == params_.end()) return std::nullopt;
    return it->second;
  }

  std::string required(const std::string& name) const {
    auto v = get(name);
    if (!v) bad("missing query parameter '" + name + "'");
    return *v;
  }

  long long integer(const std::string& name, long long def, long long lo, long long hi) const {
    const auto v = get(name);
    if (!v) return def;
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (v->empty() || ec != std::errc() || ptr != v->data() + v->size() || out < lo ||
        out > hi) {
      bad("parameter '" + name + "' must be an integer in [" + std::to_string(lo) + ", " +
          std::to_string(hi) + "]");
    }
    return out;
  }

  bool boolean(const std::string& name, bool def) const {
    const auto v = get(name);
    if (!v) return def;
    if (*v == "true" || *v == "1") return true;
    if (*v == "false" || *v == "0") return false;
    bad("parameter '" + name + "' must be true, false, 1 or 0");
  }

 private:
  const std::multimap<std::string, std::string>& params_;
};

// JSON request bodies. nlohmann rejects invalid UTF-8 while parsing.
class Body {
 public:
  explicit Body(const std::string& text)
      : j_(Json::parse(text, nullptr, /*allow_exceptions=*/false)) {
    if (j_.is_discarded()) bad("request body is not valid JSON");
    if (!j_.is_object()) bad("request body must be a JSON object");
  }

  const Json* find(const char* name) const {
    const auto it = j_.find(name);
    return it == j_.end() || it->is_null() ? nullptr : &*it;
  }

  std::string text(const char* name) const {
    const Json* v = find(name);
    if (v == nullptr) bad(std::string("missing field '") + name + "'");
    if (!v->is_string()) bad(std::string("field '") + name + "' must be a string");
    return v->get<std::string>();
  }

  long long integer(const char* name, long long def, long long lo, long long hi) const {
    const Json* v = find(name);
    if (v == nullptr) return def;
    const std::string range =
        "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    if (!v->is_number_integer()) {
      bad(std::string("field '") + name + "' must be an integer in " + range);
    }
    if (v->is_number_unsigned() &&
        v->get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) {
      bad(std::string("field '") + name + "' must be an integer in " + range);
    }
    const long long out = v->get<long long>();
    if (out < lo || out > hi) {
      bad(std::string("field '") + name + "' must be an integer in " + range);
    }
    return out;
  }

  std::uint64_t unsigned64(const char* name, std::uint64_t def) const {
    const Json* v = find(name);
    if (v == nullptr) return def;
    if (!v->is_number_unsigned() &&
        !(v->is_number_integer() && v->get<long long>() >= 0)) {
      bad(std::string("field '") + name + "' must be a non-negative 64-bit integer");
    }
    return v->get<std::uint64_t>();
  }

  double number(const char* name, double def) const {
    const Json* v = find(name);
    if (v == nullptr) return def;
    if (!v->is_number()) bad(std::string("field '") + name + "' must be a number");
    return v->get<double>();
  }

  bool boolean(const char* name, bool def) const {
    const Json* v = find(name);
    if (v == nullptr) return def;
    if (!v->is_boolean()) bad(std::string("field '") + name + "' must be a boolean");
    return v->get<bool>();
  }

 private:
  Json j_;
};

std::string content_type_for(const std::filesystem::path& path) {
  static const std::map<std::string, std::string> types = {
      {".html", "text/html; charset=utf-8"},
      {".js", "text/javascript; charset=utf-8"},
      {".mjs", "text/javascript; charset=utf-8"},
      {".css", "text/css; charset=utf-8"},
      {".json", "application/json"},
      {".map", "application/json"},
      {".svg", "image/svg+xml"},
      {".png", "image/png"},
      {".ico", "image/x-icon"},
      {".txt", "text/plain; charset=utf-8"},
      {".woff2", "font/woff2"},
  };
  const auto it = types.find(path.extension().string());
  return it == types.end() ? "application/octet-stream" : it->second;
}

constexpr std::string_view kPlaceholderPage = R"(<!doctype html>
<html lang="en">
<head><meta charset="utf-8"><title>cryptext</title></head>
<body>
<h1>cryptext</h1>
<p>The browser console is not installed. Set <code>static_dir</code> in the
service config to the built console assets, or use the JSON API under
<code>/api/v1/</code>.</p>
</body>
</html>
)";

std::string index_signature(const std::filesystem::path& dir) {
  std::string sig;
  std::error_code ec;
  std::vector<std::string> parts;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (!name.starts_with("index-k") || !name.ends_with(".tsv")) continue;
    std::error_code ec2;
    const auto size = entry.file_size(ec2);
    const auto mtime = entry.last_write_time(ec2).time_since_epoch().count();
    parts.push_back(name + ":" + std::to_string(size) + ":" + std::to_string(mtime));
  }
  std::sort(parts.begin(), parts.end());
  for (const auto& p : parts) sig += p + "\n";
  return sig;
}

}  // namespace

Artifacts load_artifacts(const ApiConfig& config) {
  if (config.index_dir.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "config needs index_dir");
  }
  const EncoderConfig encoder = config.encoder.empty()
                                    ? EncoderConfig::standard()
                                    : EncoderConfig::load(config.encoder);
  Artifacts a;
  a.indexes = load_directory(config.index_dir, encoder);
  if (a.indexes.empty()) {
    throw Error(ErrorCode::kIoError,
                "no index files in " + config.index_dir.string());
  }
  if (!config.dictionary.empty()) {
    a.dictionary = std::make_shared<const WordDictionary>(
        WordDictionary::load(config.dictionary, {0, 1, 2}, encoder));
  }
  if (!config.scorer_command.empty()) {
    a.scorer = std::make_shared<const ExternalProcessScorer>(config.scorer_command);
  } else if (!config.model.empty()) {
    a.scorer = std::make_shared<const NGramModel>(NGramModel::load(config.model));
  } else {
    a.scorer = std::make_shared<const UniformScorer>();
  }
  if (!config.lexicon.empty()) {
    a.lexicon = std::make_shared<const SentimentLexicon>(SentimentLexicon::load(config.lexicon));
  }
  if (!config.corpus.empty()) {
    Corpus corpus = read_corpus_file(config.corpus);
    if (corpus.report.malformed > 0) {
      spdlog::warn("corpus {}: skipped {} malformed lines", config.corpus.string(),
                   corpus.report.malformed);
    }
    a.corpus = std::make_shared<const std::vector<Document>>(std::move(corpus.documents));
  }
  return a;
}

Service::Service(ApiConfig config) : Service(config, load_artifacts(config)) {}

Service::Service(ApiConfig config, Artifacts artifacts)
    : config_(std::move(config)),
      encoder_(artifacts.indexes.empty() ? EncoderConfig::standard()
                                         : artifacts.indexes.begin()->second.encoder()),
      artifacts_(std::move(artifacts)),
      cache_(config_.cache_capacity) {
  auto first = std::make_shared<Snapshot>();
  first->generation = 1;
  first->indexes = std::move(artifacts_.indexes);
  artifacts_.indexes.clear();
  snapshot_ = std::move(first);
  if (!artifacts_.scorer) artifacts_.scorer = std::make_shared<const UniformScorer>();
  if (config_.watch_interval_ms > 0 && !config_.index_dir.empty()) {
    watcher_ = std::thread([this] { watch_loop(); });
  }
}

Service::~Service() {
  {
    std::lock_guard lock(watch_mu_);
    stopping_ = true;
  }
  watch_cv_.notify_all();
  if (watcher_.joinable()) watcher_.join();
}

std::shared_ptr<const Service::Snapshot> Service::snapshot() const {
  std::lock_guard lock(snapshot_mu_);
  return snapshot_;
}

std::uint64_t Service::generation() const { return snapshot()->generation; }

std::uint64_t Service::reload_index(const std::filesystem::path& dir) {
  std::lock_guard writer(reload_mu_);
  std::map<int, PhoneticIndex> indexes;
  try {
    indexes = load_directory(dir, encoder_);
    if (indexes.empty()) {
      throw Error(ErrorCode::kIoError, "no index files in " + dir.string());
    }
  } catch (const Error& e) {
    spdlog::error("index reload from {} failed, keeping generation {}: {}: {}",
                  dir.string(), generation(), to_string(e.code()), e.what());
    throw;
  }
  auto next = std::make_shared<Snapshot>();
  next->indexes = std::move(indexes);
  {
    std::lock_guard lock(snapshot_mu_);
    next->generation = snapshot_->generation + 1;
    snapshot_ = next;
  }
  // Keys carry the generation, so stale entries could never be served; this
  // just releases their memory.
  cache_.clear();
  spdlog::info("index generation {} published from {}", next->generation, dir.string());
  return next->generation;
}

void Service::watch_loop() {
  std::string last = index_signature(config_.index_dir);
  std::unique_lock lock(watch_mu_);
  while (!watch_cv_.wait_for(lock, std::chrono::milliseconds(config_.watch_interval_ms),
                             [this] { return stopping_; })) {
    const std::string sig = index_signature(config_.index_dir);
    if (sig == last) continue;
    last = sig;
    lock.unlock();
    try {
      reload_index(config_.index_dir);
    } catch (const std::exception&) {
      // Logged by reload_index; the old generation keeps serving.
    }
    lock.lock();
  }
}

Response Service::handle(const Request& request) {
  try {
    return dispatch(request);
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const std::exception& e) {
    spdlog::error("{} {}: {}", request.method, request.path, e.what());
    return error_response(ErrorCode::kInternal, "internal error");
  }
}

Response Service::cached(const std::string& key,
                         const std::function<std::string()>& compute) const {
  if (auto hit = cache_.get(key)) {
    return {200, std::move(*hit), "application/json", "hit"};
  }
  std::string body = compute();
  cache_.put(key, body);
  return {200, std::move(body), "application/json", "miss"};
}

Response Service::dispatch(const Request& request) {
  if (request.body.size() > kMaxBodyBytes) {
    return error_response(ErrorCode::kPayloadTooLarge, "request body too large");
  }
  if (request.path == "/health") {
    if (request.method != "GET") {
      return error_response(ErrorCode::kMethodNotAllowed, "use GET");
    }
    const auto snap = snapshot();
    IndexStats stats;
    Json levels = Json::array();
    if (!snap->indexes.empty()) {
      const auto it = snap->indexes.contains(kDefaultLevel) ? snap->indexes.find(kDefaultLevel)
                                                            : snap->indexes.begin();
      stats = it->second.stats();
      for (const auto& [level, index] : snap->indexes) levels.push_back(level);
    }
    return json_response({{"status", "ok"},
                          {"generation", snap->generation},
                          {"token_count", stats.token_count},
                          {"bucket_count", stats.bucket_count},
                          {"levels", levels}});
  }
  if (request.path == "/api" || request.path.starts_with("/api/")) {
    if (config_.auth_token) {
      const auto it = request.headers.find("authorization");
      if (it == request.headers.end() || it->second != "Bearer " + *config_.auth_token) {
        return error_response(ErrorCode::kUnauthorized, "missing or invalid bearer token");
      }
    }
    return api(request);
  }
  return serve_static(request);
}

Response Service::api(const Request& request) {
  const auto snap = snapshot();
  const std::string& route = request.path;
  const auto require_method = [&](std::string_view method) {
    if (request.method != method) {
      throw Error(ErrorCode::kMethodNotAllowed,
                  route + " accepts " + std::string(method) + " only");
    }
  };
  const auto index_for = [&](long long k) -> const PhoneticIndex& {
    const auto it = snap->indexes.find(static_cast<int>(k));
    if (it == snap->indexes.end()) {
      bad("no index loaded for level k=" + std::to_string(k));
    }
    return it->second;
  };

  if (route == "/api/v1/lookup") {
    require_method("GET");
    const Params p(request.params);
    const std::string token = p.required("token");
    LookupParams lp;
    lp.k = static_cast<int>(p.integer("k", 1, 0, kMaxLevel));
    lp.d = static_cast<std::size_t>(p.integer("d", 3, 0, kMaxDistance));
    lp.case_sensitive = p.boolean("case_sensitive", false);
    lp.min_count = static_cast<std::uint64_t>(
        p.integer("min_count", 1, 1, std::numeric_limits<long long>::max()));
    const PhoneticIndex& index = index_for(lp.k);
    auto key = KeyBuilder(route, snap->generation)
                   .add(token).num(lp.k).num(lp.d).num(lp.case_sensitive).num(lp.min_count);
    return cached(std::move(key).str(),
                  [&] { return wire::dump(wire::to_json(lookup(index, token, lp))); });
  }

  if (route == "/api/v1/normalize") {
    require_method("POST");
    const Body b(request.body);
    const std::string text = b.text("text");
    NormalizeParams np;
    np.k = static_cast<int>(b.integer("k", 1, 0, kMaxLevel));
    np.d = static_cast<std::size_t>(b.integer("d", 3, 0, kMaxDistance));
    np.top_n = static_cast<std::size_t>(b.integer("top_n", 5, 1, kMaxTopN));
    if (!artifacts_.dictionary) {
      throw Error(ErrorCode::kUnavailable, "no dictionary configured");
    }
    if (!artifacts_.dictionary->has_level(np.k)) {
      bad("dictionary has no level k=" + std::to_string(np.k));
    }
    auto key = KeyBuilder(route, snap->generation).add(text).num(np.k).num(np.d).num(np.top_n);
    return cached(std::move(key).str(), [&] {
      return wire::dump(
          wire::to_json(normalize_text(text, *artifacts_.dictionary, *artifacts_.scorer, np)));
    });
  }

  if (route == "/api/v1/perturb") {
    require_method("POST");
    const Body b(request.body);
    const std::string text = b.text("text");
    PerturbRequest pr;
    pr.ratio = b.number("ratio", 0.25);
    pr.seed = b.unsigned64("seed", 0);
    pr.case_sensitive = b.boolean("case_sensitive", false);
    pr.lookup.k = static_cast<int>(b.integer("k", 1, 0, kMaxLevel));
    pr.lookup.d = static_cast<std::size_t>(b.integer("d", 3, 0, kMaxDistance));
    const PhoneticIndex& index = index_for(pr.lookup.k);
    auto key = KeyBuilder(route, snap->generation)
                   .add(text).add(format_double(pr.ratio)).num(pr.seed)
                   .num(pr.case_sensitive).num(pr.lookup.k).num(pr.lookup.d);
    return cached(std::move(key).str(),
                  [&] { return wire::dump(wire::to_json(perturb_text(text, index, pr))); });
  }

  if (route == "/api/v1/perturb/corpus") {
    require_method("POST");
    const Body b(request.body);
    const Json* items = b.find("documents");
    if (items == nullptr || !items->is_array()) bad("field 'documents' must be an array");
    if (items->size() > kMaxBulkItems) {
      throw Error(ErrorCode::kPayloadTooLarge,
                  "at most " + std::to_string(kMaxBulkItems) + " documents per request");
    }
    std::vector<Document> docs;
    docs.reserve(items->size());
    for (std::size_t i = 0; i < items->size(); ++i) {
      const Json& item = (*items)[i];
      Document doc;
      doc.id = std::to_string(i);
      if (item.is_string()) {
        doc.text = item.get<std::string>();
      } else if (item.is_object() && item.contains("text") && item["text"].is_string()) {
        doc.text = item["text"].get<std::string>();
        if (item.contains("id")) {
          if (!item["id"].is_string()) bad("documents[" + std::to_string(i) + "].id must be a string");
          doc.id = item["id"].get<std::string>();
        }
      } else {
        bad("documents[" + std::to_string(i) + "] must be a string or {id, text}");
      }
      docs.push_back(std::move(doc));
    }
    PerturbRequest pr;
    pr.ratio = b.number("ratio", 0.25);
    pr.seed = b.unsigned64("seed", 0);
    pr.case_sensitive = b.boolean("case_sensitive", false);
    pr.lookup.k = static_cast<int>(b.integer("k", 1, 0, kMaxLevel));
    pr.lookup.d = static_cast<std::size_t>(b.integer("d", 3, 0, kMaxDistance));
    const PhoneticIndex& index = index_for(pr.lookup.k);
    KeyBuilder kb(route, snap->generation);
    kb.add(format_double(pr.ratio)).num(pr.seed).num(pr.case_sensitive)
        .num(pr.lookup.k).num(pr.lookup.d).num(docs.size());
    for (const Document& d : docs) kb.add(d.id).add(d.text);
    return cached(std::move(kb).str(), [&] {
      const CorpusPerturbation result = perturb_corpus(docs, index, pr);
      Json manifest = Json::array();
      Json out_docs = Json::array();
      for (const ManifestRow& row : result.manifest) manifest.push_back(wire::to_json(row));
      for (const Document& d : result.documents) {
        out_docs.push_back({{"id", d.id}, {"text", d.text}});
      }
      return wire::dump({{"manifest", manifest},
                         {"documents", out_docs},
                         {"total_words", result.total_words},
                         {"total_achieved", result.total_achieved},
                         {"achieved_ratio", result.achieved_ratio()},
                         {"rng", kGeneratorName}});
    });
  }

  if (route == "/api/v1/timeline") {
    require_method("GET");
    const Params p(request.params);
    TimelineQuery q;
    q.word = p.required("word");
    q.lookup.k = static_cast<int>(p.integer("k", 1, 0, kMaxLevel));
    q.lookup.d = static_cast<std::size_t>(p.integer("d", 3, 0, kMaxDistance));
    q.lookup.case_sensitive = p.boolean("case_sensitive", false);
    q.split_variants = p.boolean("split_variants", true);
    const auto parse_ts = [&](const char* name) -> std::optional<Timestamp> {
      const auto v = p.get(name);
      if (!v) return std::nullopt;
      const auto ts = parse_rfc3339(*v);
      if (!ts) {
        throw Error(ErrorCode::kUnparseableTimestamp,
                    std::string("parameter '") + name + "' is not an RFC 3339 timestamp");
      }
      return ts;
    };
    q.from = parse_ts("from");
    q.to = parse_ts("to");
    if (const auto g = p.get("granularity")) {
      const auto parsed = parse_granularity(*g);
      if (!parsed) bad("granularity must be day, week or month");
      q.granularity = *parsed;
    }
    const PhoneticIndex& index = index_for(q.lookup.k);
    if (!artifacts_.corpus) throw Error(ErrorCode::kUnavailable, "no corpus configured");
    auto key = KeyBuilder(route, snap->generation)
                   .add(q.word).num(q.lookup.k).num(q.lookup.d).num(q.lookup.case_sensitive)
                   .num(q.split_variants).add(q.from ? std::to_string(*q.from) : "-")
                   .add(q.to ? std::to_string(*q.to) : "-").add(to_string(q.granularity));
    return cached(std::move(key).str(), [&] {
      return wire::dump(wire::to_json(
          build_timeline(*artifacts_.corpus, index, q, artifacts_.lexicon.get())));
    });
  }

  if (route == "/api/v1/stats") {
    require_method("GET");
    Json indexes = Json::object();
    for (const auto& [level, index] : snap->indexes) {
      indexes[std::to_string(level)] = wire::to_json(index.stats());
    }
    const ResponseCache::Stats c = cache_.stats();
    Json body = {{"generation", snap->generation},
                 {"encoder", encoder_.hash_hex()},
                 {"indexes", indexes},
                 {"cache",
                  {{"hits", c.hits},
                   {"misses", c.misses},
                   {"evictions", c.evictions},
                   {"size", c.size},
                   {"capacity", c.capacity}}},
                 {"dictionary_words",
                  artifacts_.dictionary ? Json(artifacts_.dictionary->size()) : Json(nullptr)},
                 {"corpus_documents",
                  artifacts_.corpus ? Json(artifacts_.corpus->size()) : Json(nullptr)}};
    return json_response(body);
  }

  if (route == "/api/v1/admin/reload") {
    require_method("POST");
    if (config_.index_dir.empty()) {
      throw Error(ErrorCode::kUnavailable, "no index_dir configured");
    }
    const auto gen = reload_index(config_.index_dir);
    return json_response({{"generation", gen}});
  }

  throw Error(ErrorCode::kNotFound, "no route " + route);
}

Response Service::serve_static(const Request& request) const {
  if (request.method != "GET" && request.method != "HEAD") {
    return error_response(ErrorCode::kMethodNotAllowed, "static assets accept GET only");
  }
  const std::string& path = request.path;
  if (config_.static_dir.empty()) {
    if (path == "/" || path == "/index.html") {
      return {200, std::string(kPlaceholderPage), "text/html; charset=utf-8", {}};
    }
    return error_response(ErrorCode::kNotFound, "not found");
  }
  if (path.empty() || path.front() != '/' || path.find("..") != std::string::npos ||
      path.find('\\') != std::string::npos || path.find('\0') != std::string::npos) {
    return error_response(ErrorCode::kNotFound, "not found");
  }
  std::filesystem::path file = config_.static_dir / path.substr(1);
  std::error_code ec;
  if (path == "/" || std::filesystem::is_directory(file, ec)) file /= "index.html";
  if (!std::filesystem::is_regular_file(file, ec)) {
    return error_response(ErrorCode::kNotFound, "not found");
  }
  return {200, detail::read_file(file), content_type_for(file), {}};
}

}  // namespace cryptext::service
