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

#include "cryptext/textcore.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {
namespace {

bool is_joiner(char32_t cp) { return cp == '-' || cp == '\'' || cp == U'’'; }

bool is_edge_punct(char32_t cp) {
  return is_joiner(cp) || cp == '!' || cp == '|' || cp == '+';
}

}  // namespace

std::vector<TokenSpan> tokenize(std::string_view text, const EncoderConfig& config) {
  struct Unit {
    char32_t cp;
    std::size_t start;
    std::size_t end;
  };
  const auto token_char = [&](char32_t cp) {
    return utf8::is_letter(cp) || utf8::is_digit(cp) ||
           utf8::is_combining_mark(cp) || config.is_visual_symbol(cp) ||
           is_joiner(cp);
  };

  std::vector<TokenSpan> spans;
  std::vector<Unit> run;
  const auto flush = [&] {
    std::size_t lo = 0;
    std::size_t hi = run.size();
    while (lo < hi && is_edge_punct(run[lo].cp)) ++lo;
    while (hi > lo && is_edge_punct(run[hi - 1].cp)) --hi;
    if (lo < hi) {
      TokenSpan span;
      span.start = run[lo].start;
      span.end = run[hi - 1].end;
      span.raw = std::string(text.substr(span.start, span.end - span.start));
      for (std::size_t i = lo; i < hi; ++i) {
        if (utf8::is_letter(run[i].cp)) {
          span.is_word = true;
          break;
        }
      }
      spans.push_back(std::move(span));
    }
    run.clear();
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    auto d = utf8::decode(text, pos);
    if (!d) {
      flush();
      ++pos;
      continue;
    }
    if (token_char(d->cp)) {
      run.push_back({d->cp, pos, pos + d->length});
    } else {
      flush();
    }
    pos += d->length;
  }
  flush();
  return spans;
}

}  // namespace cryptext
