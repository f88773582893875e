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
#include <sstream>

#include "cryptext/error.hpp"
#include "cryptext/index.hpp"
#include "io_util.hpp"

namespace cryptext {
namespace {

constexpr const char* kLedgerName = "ingested.lst";

std::string fingerprint(const std::filesystem::directory_entry& entry) {
  return entry.path().filename().string() + "\t" + std::to_string(entry.file_size());
}

}  // namespace

FolderIngestor::FolderIngestor(std::filesystem::path in_dir,
                               std::filesystem::path out_dir, std::set<int> levels,
                               const EncoderConfig& encoder, IngestOptions options)
    : in_dir_(std::move(in_dir)),
      out_dir_(std::move(out_dir)),
      levels_(std::move(levels)),
      encoder_(encoder),
      options_(options) {
  const auto ledger = out_dir_ / kLedgerName;
  if (std::filesystem::exists(ledger)) {
    std::istringstream in(detail::read_file(ledger));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) seen_.insert(line);
    }
  }
}

FolderIngestor::PollResult FolderIngestor::poll() {
  PollResult result;
  std::vector<std::filesystem::directory_entry> fresh;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(in_dir_, ec)) {
    if (!entry.is_regular_file()) continue;
    if (!seen_.contains(fingerprint(entry))) fresh.push_back(entry);
  }
  if (ec) throw Error(ErrorCode::kIoError, "cannot list " + in_dir_.string());
  if (fresh.empty()) return result;
  std::sort(fresh.begin(), fresh.end());

  std::vector<std::filesystem::path> paths;
  for (const auto& entry : fresh) paths.push_back(entry.path());
  const Corpus corpus = read_corpus_files(paths);
  IngestResult batch = ingest(corpus.documents, levels_, encoder_, options_);

  std::map<int, PhoneticIndex> current;
  bool have_existing = false;
  for (int k : levels_) have_existing |= std::filesystem::exists(index_file_name(out_dir_, k));
  if (have_existing) current = load_directory(out_dir_, encoder_);

  std::map<int, PhoneticIndex> next;
  for (auto& [k, index] : batch.indexes) {
    auto it = current.find(k);
    next.emplace(k, it == current.end() ? std::move(index) : merge(it->second, index));
  }
  save_directory(next, out_dir_);

  for (const auto& entry : fresh) seen_.insert(fingerprint(entry));
  std::string ledger;
  for (const auto& line : seen_) ledger += line + "\n";
  detail::write_atomically(out_dir_ / kLedgerName, ledger);

  result.new_files = fresh.size();
  result.report = batch.report;
  result.corpus = corpus.report;
  return result;
}

}  // namespace cryptext
