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
#include <fstream>
#include <sstream>

#include "cryptext/checksum.hpp"
#include "cryptext/error.hpp"
#include "cryptext/index.hpp"
#include "cryptext/utf8.hpp"
#include "io_util.hpp"

namespace cryptext {
namespace {

constexpr std::string_view kMagic = "CRYPTEXT-INDEX";
constexpr std::string_view kVersion = "v1";

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorCode::kCorruptFile, "index file: " + what);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

std::string serialize(const PhoneticIndex& index) {
  std::vector<std::pair<std::string_view, const PhoneticIndex::Bucket*>> keys;
  keys.reserve(index.buckets().size());
  for (const auto& [key, bucket] : index.buckets()) keys.emplace_back(key, &bucket);
  std::sort(keys.begin(), keys.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string out;
  out += kMagic;
  out += '\t';
  out += kVersion;
  out += "\tk=" + std::to_string(index.level());
  out += "\tencoder=" + index.encoder().hash_hex() + "\n";
  for (const auto& [key, bucket] : keys) {
    for (const auto& [raw, count] : *bucket) {
      out += key;
      out += '\t';
      out += raw;
      out += '\t';
      out += std::to_string(count);
      out += '\n';
    }
  }
  out += "#CHECKSUM\t" + hex16(fnv1a64(out)) + "\n";
  return out;
}

void save(const PhoneticIndex& index, const std::filesystem::path& path) {
  detail::write_atomically(path, serialize(index));
}

PhoneticIndex deserialize(std::string_view bytes, const EncoderConfig& encoder) {
  const auto header_end = bytes.find('\n');
  if (header_end == std::string_view::npos) corrupt("missing header");
  const auto header = split_tabs(bytes.substr(0, header_end));
  if (header.empty() || header[0] != kMagic) corrupt("bad magic");
  if (header.size() < 2 || header[1] != kVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "index file version '" + std::string(header.size() > 1 ? header[1] : "") +
                    "' is not supported");
  }
  if (header.size() != 4 || header[2].substr(0, 2) != "k=" ||
      header[3].substr(0, 8) != "encoder=") {
    corrupt("malformed header");
  }

  // Trailer: "#CHECKSUM\t<hex>" as the last line, newline optional.
  std::string_view body = bytes;
  if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
  const auto trailer_start = body.rfind('\n');
  if (trailer_start == std::string_view::npos) corrupt("missing checksum");
  const auto trailer = split_tabs(body.substr(trailer_start + 1));
  if (trailer.size() != 2 || trailer[0] != "#CHECKSUM") corrupt("missing checksum");
  const auto expected = parse_hex16(trailer[1]);
  const std::string_view covered = bytes.substr(0, trailer_start + 1);
  if (!expected || *expected != fnv1a64(covered)) corrupt("checksum mismatch");

  int level = -1;
  const auto level_text = header[2].substr(2);
  auto [p, ec] = std::from_chars(level_text.data(), level_text.data() + level_text.size(), level);
  if (ec != std::errc{} || p != level_text.data() + level_text.size() || level < 0) {
    corrupt("bad level");
  }
  const auto file_hash = parse_hex16(header[3].substr(8));
  if (!file_hash) corrupt("bad encoder hash");
  if (*file_hash != encoder.hash()) {
    throw Error(ErrorCode::kConfigMismatch,
                "index was built with encoder " + hex16(*file_hash) + ", expected " +
                    encoder.hash_hex());
  }

  PhoneticIndex index(level, encoder);
  std::string_view entries = covered.substr(header_end + 1);
  std::string prev_key, prev_raw;
  bool first = true;
  while (!entries.empty()) {
    const auto nl = entries.find('\n');
    const std::string_view line = entries.substr(0, nl);
    entries.remove_prefix(nl + 1);
    const auto fields = split_tabs(line);
    if (fields.size() != 3 || fields[1].empty() || !utf8::is_valid(fields[1])) {
      corrupt("malformed entry");
    }
    std::uint64_t count = 0;
    auto [cp, cec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), count);
    if (cec != std::errc{} || cp != fields[2].data() + fields[2].size() || count == 0) {
      corrupt("bad count");
    }
    if (!first && std::tie(prev_key, prev_raw) >= std::tie(fields[0], fields[1])) {
      corrupt("entries not strictly sorted");
    }
    auto key = try_encode(fields[1], level, encoder);
    if (!key || key->text != fields[0]) corrupt("entry key does not match its token");
    index.add_keyed(fields[0], fields[1], count);
    prev_key.assign(fields[0]);
    prev_raw.assign(fields[1]);
    first = false;
  }
  return index;
}

PhoneticIndex load(const std::filesystem::path& path, const EncoderConfig& encoder) {
  return deserialize(detail::read_file(path), encoder);
}

std::filesystem::path index_file_name(const std::filesystem::path& dir, int level) {
  return dir / ("index-k" + std::to_string(level) + ".tsv");
}

void save_directory(const std::map<int, PhoneticIndex>& indexes,
                    const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string());
  for (const auto& [k, index] : indexes) save(index, index_file_name(dir, k));
}

std::map<int, PhoneticIndex> load_directory(const std::filesystem::path& dir,
                                            const EncoderConfig& encoder) {
  std::map<int, PhoneticIndex> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.size() < 12 || name.rfind("index-k", 0) != 0 ||
        name.substr(name.size() - 4) != ".tsv") {
      continue;
    }
    PhoneticIndex index = load(entry.path(), encoder);
    const int k = index.level();
    if (name != index_file_name({}, k).string()) {
      throw Error(ErrorCode::kCorruptFile, name + " holds level " + std::to_string(k));
    }
    out.emplace(k, std::move(index));
  }
  if (ec) throw Error(ErrorCode::kIoError, "cannot read index directory " + dir.string());
  if (out.empty()) throw Error(ErrorCode::kIoError, "no index files in " + dir.string());
  return out;
}

}  // namespace cryptext
