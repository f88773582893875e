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

#include "cryptext/error.hpp"
#include "cryptext/index.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {

PhoneticIndex::PhoneticIndex(int level, const EncoderConfig& encoder)
    : level_(level), encoder_(encoder) {
  if (level < 0) throw Error(ErrorCode::kInvalidArgument, "phonetic level must be >= 0");
}

void PhoneticIndex::add_keyed(std::string_view key, std::string_view raw,
                              std::uint64_t count) {
  if (count == 0) return;
  auto& bucket = buckets_[std::string(key)];
  auto it = bucket.find(raw);
  if (it == bucket.end()) {
    bucket.emplace(std::string(raw), count);
    ++token_count_;
  } else {
    it->second += count;
  }
}

bool PhoneticIndex::add(std::string_view raw, std::uint64_t count) {
  auto key = try_encode(raw, level_, encoder_);
  if (!key) return false;
  add_keyed(key->text, raw, count);
  return true;
}

std::vector<TokenEntry> PhoneticIndex::get_bucket(const SoundexKey& key) const {
  if (key.level != level_) {
    throw Error(ErrorCode::kLevelMismatch,
                "key level " + std::to_string(key.level) + " does not match index level " +
                    std::to_string(level_));
  }
  std::vector<TokenEntry> out;
  if (const Bucket* bucket = find_bucket(key.text)) {
    out.reserve(bucket->size());
    for (const auto& [raw, count] : *bucket) out.push_back({raw, count});
  }
  return out;
}

const PhoneticIndex::Bucket* PhoneticIndex::find_bucket(std::string_view key_text) const {
  auto it = buckets_.find(std::string(key_text));
  return it == buckets_.end() ? nullptr : &it->second;
}

IndexStats PhoneticIndex::stats() const noexcept {
  return {token_count_, buckets_.size(), document_count_};
}

bool operator==(const PhoneticIndex& a, const PhoneticIndex& b) {
  return a.level_ == b.level_ && a.encoder_.hash() == b.encoder_.hash() &&
         a.token_count_ == b.token_count_ && a.buckets_ == b.buckets_;
}

bool admissible(const TokenSpan& span, const EncoderConfig& encoder,
                const IngestOptions& options) {
  if (!span.is_word) return false;
  std::size_t length = 0;
  for (std::size_t pos = 0; pos < span.raw.size();) {
    auto d = utf8::decode(span.raw, pos);
    if (!d) return false;
    pos += d->length;
    if (++length > options.max_token_length) return false;
  }
  return try_encode(span.raw, 0, encoder).has_value();
}

PhoneticIndex merge(const PhoneticIndex& a, const PhoneticIndex& b) {
  if (a.level() != b.level()) {
    throw Error(ErrorCode::kLevelMismatch, "cannot merge indexes of different levels");
  }
  if (a.encoder().hash() != b.encoder().hash()) {
    throw Error(ErrorCode::kConfigMismatch,
                "cannot merge indexes built with different encoder configs");
  }
  PhoneticIndex out = a;
  for (const auto& [key, bucket] : b.buckets()) {
    for (const auto& [raw, count] : bucket) out.add_keyed(key, raw, count);
  }
  out.add_documents(b.stats().document_count);
  return out;
}

}  // namespace cryptext
