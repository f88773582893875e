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

#include <charconv>
#include <cstdlib>
#include <limits>

#include "io_util.hpp"
#include "cryptext/error.hpp"
#include "cryptext/service.hpp"

namespace cryptext::service {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

long long parse_int(std::string_view key, std::string_view value, long long lo, long long hi) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || v < lo || v > hi) {
    throw Error(ErrorCode::kInvalidConfig,
                "config key '" + std::string(key) + "' needs an integer in [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "], got '" +
                    std::string(value) + "'");
  }
  return v;
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

}  // namespace

ApiConfig ApiConfig::parse(std::string_view text, const std::filesystem::path& base) {
  ApiConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "bind") {
      config.bind = std::string(value);
    } else if (key == "port") {
      config.port = static_cast<int>(parse_int(key, value, 0, 65535));
    } else if (key == "auth_token") {
      if (value.empty()) {
        config.auth_token.reset();
      } else {
        config.auth_token = std::string(value);
      }
    } else if (key == "cache_capacity") {
      config.cache_capacity = static_cast<std::size_t>(
          parse_int(key, value, 0, std::numeric_limits<int>::max()));
    } else if (key == "index_dir") {
      config.index_dir = resolve(base, value);
    } else if (key == "dictionary") {
      config.dictionary = resolve(base, value);
    } else if (key == "model") {
      config.model = resolve(base, value);
    } else if (key == "lexicon") {
      config.lexicon = resolve(base, value);
    } else if (key == "corpus") {
      config.corpus = resolve(base, value);
    } else if (key == "static_dir") {
      config.static_dir = resolve(base, value);
    } else if (key == "encoder") {
      config.encoder = resolve(base, value);
    } else if (key == "scorer_command") {
      config.scorer_command = std::string(value);
    } else if (key == "watch_interval_ms") {
      config.watch_interval_ms =
          static_cast<int>(parse_int(key, value, 0, 24 * 3600 * 1000));
    } else {
      throw Error(ErrorCode::kInvalidConfig,
                  "config line " + std::to_string(line_no) + ": unknown key '" +
                      std::string(key) + "'");
    }
  }
  if (const char* token = std::getenv(kTokenEnvVar); token != nullptr && *token != '\0') {
    config.auth_token = std::string(token);
  }
  return config;
}

ApiConfig ApiConfig::load(const std::filesystem::path& path) {
  return parse(detail::read_file(path), path.parent_path());
}

}  // namespace cryptext::service
