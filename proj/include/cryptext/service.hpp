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

#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cryptext/analytics.hpp"
#include "cryptext/index.hpp"
#include "cryptext/normalize.hpp"

namespace cryptext::service {

inline constexpr const char* kTokenEnvVar = "CRYPTEXT_API_TOKEN";
inline constexpr std::size_t kMaxBulkItems = 1000;
inline constexpr std::size_t kMaxBodyBytes = 8 << 20;

struct ApiConfig {
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> auth_token;  // unset: open development mode
  std::size_t cache_capacity = 1024;
  std::filesystem::path index_dir;
  std::filesystem::path dictionary;
  std::filesystem::path model;
  std::filesystem::path lexicon;
  std::filesystem::path corpus;      // timestamped documents for timelines
  std::filesystem::path static_dir;  // browser console assets
  std::filesystem::path encoder;     // optional encoder config file
  std::string scorer_command;        // external coherency scorer
  int watch_interval_ms = 0;         // > 0: poll index_dir and hot-reload

  // key=value lines, '#' comments. Relative paths resolve against `base`.
  // CRYPTEXT_API_TOKEN, when set, overrides auth_token.
  static ApiConfig parse(std::string_view text, const std::filesystem::path& base = {});
  static ApiConfig load(const std::filesystem::path& path);
};

// Thread-safe LRU map from request key to response body.
class ResponseCache {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t evictions = 0;
    std::size_t size = 0;
    std::size_t capacity = 0;
  };

  explicit ResponseCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<std::string> get(const std::string& key);
  void put(const std::string& key, std::string value);
  void clear();
  Stats stats() const;

 private:
  using Entry = std::pair<std::string, std::string>;
  mutable std::mutex mu_;
  std::size_t capacity_;
  std::list<Entry> order_;  // most recent first
  std::unordered_map<std::string, std::list<Entry>::iterator> entries_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
  std::uint64_t evictions_ = 0;
};

struct Request {
  std::string method;
  std::string path;
  std::multimap<std::string, std::string> params;
  std::map<std::string, std::string> headers;  // lowercase names
  std::string body;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::string cache;  // "hit" or "miss" on cached routes, empty elsewhere
};

// Everything a service instance serves from. Missing optional parts make the
// corresponding routes answer 503.
struct Artifacts {
  std::map<int, PhoneticIndex> indexes;
  std::shared_ptr<const WordDictionary> dictionary;
  std::shared_ptr<const CoherencyScorer> scorer;
  std::shared_ptr<const SentimentLexicon> lexicon;
  std::shared_ptr<const std::vector<Document>> corpus;
};

Artifacts load_artifacts(const ApiConfig& config);

class Service {
 public:
  // Loads artifacts from the configured paths; throws on any failure.
  explicit Service(ApiConfig config);
  Service(ApiConfig config, Artifacts artifacts);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Thread-safe; concurrent calls share the published index generation.
  Response handle(const Request& request);

  // Validates and swaps in the indexes in `dir`. On failure the current
  // generation keeps serving and the error is rethrown.
  std::uint64_t reload_index(const std::filesystem::path& dir);
  std::uint64_t generation() const;
  ResponseCache::Stats cache_stats() const { return cache_.stats(); }
  const ApiConfig& config() const noexcept { return config_; }

 private:
  struct Snapshot {
    std::uint64_t generation;
    std::map<int, PhoneticIndex> indexes;
  };

  std::shared_ptr<const Snapshot> snapshot() const;
  Response dispatch(const Request& request);
  Response api(const Request& request);
  Response serve_static(const Request& request) const;
  Response cached(const std::string& key, const std::function<std::string()>& compute) const;
  void watch_loop();

  ApiConfig config_;
  EncoderConfig encoder_;
  Artifacts artifacts_;
  mutable std::mutex snapshot_mu_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::mutex reload_mu_;
  mutable ResponseCache cache_;

  std::mutex watch_mu_;
  std::condition_variable watch_cv_;
  bool stopping_ = false;
  std::thread watcher_;
};

// Thin cpp-httplib front end over Service::handle.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds (port 0 picks a free port) and serves on a background thread.
  // Returns the bound port.
  int start(const std::string& host, int port);
  // Binds and serves on the calling thread until stop().
  bool listen(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cryptext::service
