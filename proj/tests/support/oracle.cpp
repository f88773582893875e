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

#include "oracle.hpp"

#include <algorithm>
#include <vector>

namespace cryptext::testing {

std::size_t oracle_distance(std::u32string_view a, std::u32string_view b) {
  std::vector<std::vector<std::size_t>> m(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) m[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) m[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = m[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      m[i][j] = std::min({m[i - 1][j] + 1, m[i][j - 1] + 1, sub});
    }
  }
  return m[a.size()][b.size()];
}

std::u32string oracle_u32(std::string_view s, bool fold_ascii) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    char32_t cp;
    int len;
    if (c < 0x80) {
      cp = c, len = 1;
    } else if (c < 0xE0) {
      cp = c & 0x1F, len = 2;
    } else if (c < 0xF0) {
      cp = c & 0x0F, len = 3;
    } else {
      cp = c & 0x07, len = 4;
    }
    for (int k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    if (fold_ascii && cp >= 'A' && cp <= 'Z') cp += 32;
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string oracle_key(std::string_view word, int k) {
  const auto code = [](char c) -> char {
    switch (c) {
      case 'b': case 'f': case 'p': case 'v': return '1';
      case 'c': case 'g': case 'j': case 'k': case 'q': case 's': case 'x': case 'z':
        return '2';
      case 'd': case 't': return '3';
      case 'l': return '4';
      case 'm': case 'n': return '5';
      case 'r': return '6';
      default: return '0';
    }
  };
  std::string key;
  for (int i = 0; i <= k; ++i) {
    key += i < static_cast<int>(word.size()) ? static_cast<char>(word[i] - 'a' + 'A') : '0';
  }
  std::string codes;
  for (std::size_t i = k + 1; i < word.size(); ++i) codes += code(word[i]);
  std::string merged;
  for (char c : codes) {
    if (merged.empty() || merged.back() != c) merged += c;
  }
  std::string digits;
  for (char c : merged) {
    if (c != '0') digits += c;
  }
  while (digits.size() < 3) digits += '0';
  return key + digits;
}

}  // namespace cryptext::testing
