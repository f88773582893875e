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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cryptext/corpus.hpp"
#include "cryptext/textcore.hpp"

namespace cryptext {

struct TokenEntry {
  std::string raw;  // case-sensitive as observed
  std::uint64_t count = 0;

  friend bool operator==(const TokenEntry&, const TokenEntry&) = default;
};

struct IndexStats {
  std::size_t token_count = 0;   // distinct raw tokens
  std::size_t bucket_count = 0;
  std::uint64_t document_count = 0;
};

// The hash-map from phonetic key (at one level) to the raw tokens observed
// under that key. Treated as immutable once published; the mutating members
// exist for builders (ingest, merge, load).
class PhoneticIndex {
 public:
  using Bucket = std::map<std::string, std::uint64_t, std::less<>>;

  explicit PhoneticIndex(int level,
                         const EncoderConfig& encoder = EncoderConfig::standard());

  int level() const noexcept { return level_; }
  const EncoderConfig& encoder() const noexcept { return encoder_; }

  // Adds `count` occurrences of `raw` under `key`. `key` must equal
  // encode(raw, level()).text; callers that have not computed it use add().
  void add_keyed(std::string_view key, std::string_view raw, std::uint64_t count);
  // Returns false (and adds nothing) when raw has no encodable letters.
  bool add(std::string_view raw, std::uint64_t count = 1);
  void add_documents(std::uint64_t n) noexcept { document_count_ += n; }

  // Throws kLevelMismatch when key.level != level().
  std::vector<TokenEntry> get_bucket(const SoundexKey& key) const;
  const Bucket* find_bucket(std::string_view key_text) const;

  const std::unordered_map<std::string, Bucket>& buckets() const noexcept {
    return buckets_;
  }
  IndexStats stats() const noexcept;

  // Same level, encoder and bucket contents. document_count is bookkeeping and
  // is not part of the persisted form, so it is not compared.
  friend bool operator==(const PhoneticIndex& a, const PhoneticIndex& b);

 private:
  int level_;
  EncoderConfig encoder_;
  std::unordered_map<std::string, Bucket> buckets_;
  std::size_t token_count_ = 0;
  std::uint64_t document_count_ = 0;
};

struct IngestOptions {
  int max_level = 2;
  std::size_t max_token_length = 64;  // code points
};

struct IngestReport {
  std::uint64_t documents = 0;
  std::uint64_t malformed_documents = 0;
  std::uint64_t word_tokens = 0;      // admitted occurrences
  std::uint64_t rejected_tokens = 0;  // non-word, too long or unencodable

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct IngestResult {
  std::map<int, PhoneticIndex> indexes;
  IngestReport report;
};

// Whether a token span is admitted into an index.
bool admissible(const TokenSpan& span, const EncoderConfig& encoder,
                const IngestOptions& options = {});

// Builds one index per requested level. Documents are tokenized in parallel
// (OpenMP); raw-token counts are reduced and then bucketed per level.
// Documents whose text is not valid UTF-8 are counted as malformed and
// skipped. Throws kInvalidArgument for an empty or out-of-range level set.
IngestResult ingest(std::span<const Document> documents, const std::set<int>& levels,
                    const EncoderConfig& encoder = EncoderConfig::standard(),
                    const IngestOptions& options = {});

// Single-threaded reference with the same contract, kept for tests and the
// benchmark.
IngestResult ingest_serial(std::span<const Document> documents,
                           const std::set<int>& levels,
                           const EncoderConfig& encoder = EncoderConfig::standard(),
                           const IngestOptions& options = {});

// Bucket-wise union with counts added. Throws kLevelMismatch or
// kConfigMismatch. Inputs are not modified.
PhoneticIndex merge(const PhoneticIndex& a, const PhoneticIndex& b);

// Versioned text format with an FNV-1a checksum trailer.
std::string serialize(const PhoneticIndex& index);
void save(const PhoneticIndex& index, const std::filesystem::path& path);

// Throws kUnsupportedVersion, kCorruptFile, or kConfigMismatch when the
// file's encoder hash differs from `encoder`.
PhoneticIndex deserialize(std::string_view bytes,
                          const EncoderConfig& encoder = EncoderConfig::standard());
PhoneticIndex load(const std::filesystem::path& path,
                   const EncoderConfig& encoder = EncoderConfig::standard());

// A directory holds one file per level, named index-k<level>.tsv.
std::filesystem::path index_file_name(const std::filesystem::path& dir, int level);
void save_directory(const std::map<int, PhoneticIndex>& indexes,
                    const std::filesystem::path& dir);
std::map<int, PhoneticIndex> load_directory(
    const std::filesystem::path& dir,
    const EncoderConfig& encoder = EncoderConfig::standard());

// Append-then-merge ingestion of a folder of corpus files. Each poll()
// ingests files not seen before, merges them into the indexes in `out_dir`
// and republishes every level with an atomic rename. Processed files are
// remembered in <out_dir>/ingested.lst.
class FolderIngestor {
 public:
  FolderIngestor(std::filesystem::path in_dir, std::filesystem::path out_dir,
                 std::set<int> levels,
                 const EncoderConfig& encoder = EncoderConfig::standard(),
                 IngestOptions options = {});

  struct PollResult {
    std::size_t new_files = 0;
    IngestReport report;
    CorpusReport corpus;
  };
  PollResult poll();

 private:
  std::filesystem::path in_dir_;
  std::filesystem::path out_dir_;
  std::set<int> levels_;
  EncoderConfig encoder_;
  IngestOptions options_;
  std::set<std::string> seen_;
};

}  // namespace cryptext
