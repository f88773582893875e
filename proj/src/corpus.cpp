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

#include "cryptext/corpus.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>

#include <json.hpp>

#include "cryptext/error.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {
namespace {

constexpr std::size_t kMaxSamples = 8;

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

std::optional<std::int64_t> days_from_date(std::string_view s) {
  // YYYY-MM-DD
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  int y, m, d;
  if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), m) ||
      !parse_int(s.substr(8, 2), d)) {
    return std::nullopt;
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{static_cast<unsigned>(m)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return std::chrono::sys_days{ymd}.time_since_epoch().count();
}

}  // namespace

std::optional<Timestamp> parse_rfc3339(std::string_view text) noexcept {
  auto days = days_from_date(text.substr(0, 10));
  if (!days) return std::nullopt;
  if (text.size() == 10) return *days * 86400;
  if (text.size() < 20 || (text[10] != 'T' && text[10] != 't' && text[10] != ' ') ||
      text[13] != ':' || text[16] != ':') {
    return std::nullopt;
  }
  int hh, mm, ss;
  if (!parse_int(text.substr(11, 2), hh) || !parse_int(text.substr(14, 2), mm) ||
      !parse_int(text.substr(17, 2), ss) || hh > 23 || mm > 59 || ss > 60) {
    return std::nullopt;
  }
  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t digits_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_start) return std::nullopt;
  }
  if (pos >= text.size()) return std::nullopt;
  std::int64_t offset = 0;
  const std::string_view zone = text.substr(pos);
  if (zone == "Z" || zone == "z") {
    offset = 0;
  } else if (zone.size() == 6 && (zone[0] == '+' || zone[0] == '-') && zone[3] == ':') {
    int oh, om;
    if (!parse_int(zone.substr(1, 2), oh) || !parse_int(zone.substr(4, 2), om) ||
        oh > 23 || om > 59) {
      return std::nullopt;
    }
    offset = (oh * 3600 + om * 60) * (zone[0] == '+' ? 1 : -1);
  } else {
    return std::nullopt;
  }
  return *days * 86400 + hh * 3600 + mm * 60 + std::min(ss, 59) - offset;
}

std::string format_date(Timestamp ts) {
  using namespace std::chrono;
  const sys_days day{days{ts >= 0 ? ts / 86400 : (ts - 86399) / 86400}};
  const year_month_day ymd{day};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

std::string format_rfc3339(Timestamp ts) {
  const std::int64_t day_start = (ts >= 0 ? ts / 86400 : (ts - 86399) / 86400) * 86400;
  const std::int64_t sec = ts - day_start;
  char buf[16];
  std::snprintf(buf, sizeof buf, "T%02d:%02d:%02dZ", static_cast<int>(sec / 3600),
                static_cast<int>(sec / 60 % 60), static_cast<int>(sec % 60));
  return format_date(ts) + buf;
}

std::optional<CorpusFormat> parse_corpus_format(std::string_view name) noexcept {
  if (name == "auto") return CorpusFormat::kAuto;
  if (name == "plain" || name == "text") return CorpusFormat::kPlain;
  if (name == "records" || name == "jsonl") return CorpusFormat::kRecords;
  return std::nullopt;
}

void CorpusReport::absorb(const CorpusReport& other) {
  documents += other.documents;
  malformed += other.malformed;
  bad_timestamps += other.bad_timestamps;
  for (const auto& s : other.samples) {
    if (samples.size() >= kMaxSamples) break;
    samples.push_back(s);
  }
}

Corpus read_corpus(std::istream& in, CorpusFormat format, std::string_view source_name) {
  Corpus corpus;
  auto& report = corpus.report;
  const auto reject = [&](std::size_t line_no, std::string reason) {
    ++report.malformed;
    if (report.samples.size() < kMaxSamples) {
      report.samples.push_back({std::string(source_name), line_no, std::move(reason)});
    }
  };

  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!utf8::is_valid(line)) {
      reject(line_no, "invalid UTF-8");
      continue;
    }
    const bool record = format == CorpusFormat::kRecords ||
                        (format == CorpusFormat::kAuto && !line.empty() && line[0] == '{');
    Document doc;
    doc.id = std::string(source_name) + ":" + std::to_string(line_no);
    if (!record) {
      if (line.empty()) continue;
      doc.text = std::move(line);
    } else {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        reject(line_no, "unparseable record");
        continue;
      }
      auto text = j.find("text");
      if (text == j.end() || !text->is_string()) {
        reject(line_no, "record has no string field 'text'");
        continue;
      }
      doc.text = text->get<std::string>();
      if (auto id = j.find("id"); id != j.end()) {
        if (id->is_string()) {
          doc.id = id->get<std::string>();
        } else if (id->is_number_integer()) {
          doc.id = std::to_string(id->get<std::int64_t>());
        }
      }
      if (auto src = j.find("source"); src != j.end() && src->is_string()) {
        doc.source = src->get<std::string>();
      }
      if (auto ts = j.find("timestamp"); ts != j.end() && !ts->is_null()) {
        if (ts->is_string()) doc.timestamp = parse_rfc3339(ts->get<std::string>());
        if (!doc.timestamp) {
          doc.bad_timestamp = true;
          ++report.bad_timestamps;
        }
      }
    }
    corpus.documents.push_back(std::move(doc));
    ++report.documents;
  }
  return corpus;
}

Corpus read_corpus_file(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open corpus " + path.string());
  return read_corpus(in, format, path.filename().string());
}

Corpus read_corpus_files(const std::vector<std::filesystem::path>& paths,
                         CorpusFormat format) {
  Corpus all;
  for (const auto& path : paths) {
    Corpus one = read_corpus_file(path, format);
    all.report.absorb(one.report);
    all.documents.insert(all.documents.end(),
                         std::make_move_iterator(one.documents.begin()),
                         std::make_move_iterator(one.documents.end()));
  }
  return all;
}

}  // namespace cryptext
