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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cryptext {

// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

// RFC 3339 date-time ("2021-11-05T10:00:00Z", fractional seconds and numeric
// offsets allowed). A bare "YYYY-MM-DD" is accepted as midnight UTC.
std::optional<Timestamp> parse_rfc3339(std::string_view text) noexcept;
std::string format_rfc3339(Timestamp ts);
std::string format_date(Timestamp ts);  // YYYY-MM-DD

struct Document {
  std::string id;
  std::string text;
  std::string source;
  std::optional<Timestamp> timestamp;
  bool bad_timestamp = false;  // a timestamp field was present but unparseable
};

enum class CorpusFormat {
  kAuto,     // per line: '{' starts a record, anything else is plain text
  kPlain,    // one document per line
  kRecords,  // one JSON object per line: text, optional id/timestamp/source
};

std::optional<CorpusFormat> parse_corpus_format(std::string_view name) noexcept;

struct MalformedLine {
  std::string source;
  std::size_t line = 0;
  std::string reason;
};

struct CorpusReport {
  std::size_t documents = 0;
  std::size_t malformed = 0;
  std::size_t bad_timestamps = 0;
  std::vector<MalformedLine> samples;  // first few malformed lines

  void absorb(const CorpusReport& other);
};

struct Corpus {
  std::vector<Document> documents;
  CorpusReport report;
};

// Reads a corpus stream. Malformed lines (invalid UTF-8, unparseable records,
// records without a string `text`) are skipped and counted, never fatal.
// Documents without an explicit id get "<source>:<line>".
Corpus read_corpus(std::istream& in, CorpusFormat format = CorpusFormat::kAuto,
                   std::string_view source_name = "stdin");
Corpus read_corpus_file(const std::filesystem::path& path,
                        CorpusFormat format = CorpusFormat::kAuto);
Corpus read_corpus_files(const std::vector<std::filesystem::path>& paths,
                         CorpusFormat format = CorpusFormat::kAuto);

}  // namespace cryptext
