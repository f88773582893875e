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
#include <numeric>

#include "cryptext/textcore.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {
namespace {

std::u32string prepare(std::string_view s, CaseMode mode) {
  auto cps = utf8::to_u32(s);
  return mode == CaseMode::kFold ? utf8::casefold(cps) : cps;
}

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t levenshtein(std::string_view a, std::string_view b, CaseMode mode) {
  return levenshtein(prepare(a, mode), prepare(b, mode));
}

std::optional<std::size_t> bounded_distance(std::u32string_view a,
                                            std::u32string_view b,
                                            std::size_t d) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n - m > d) return std::nullopt;
  if (m == 0) return n;

  // row[j] holds D(i, j) for j in [i-d, i+d]; cells outside the band are
  // treated as d+1, which is enough to decide "<= d".
  const std::size_t cap = d + 1;
  std::vector<std::size_t> row(m + 1, cap);
  for (std::size_t j = 0; j <= std::min(m, d); ++j) row[j] = j;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > d ? i - d : 0;
    const std::size_t hi = std::min(m, i + d);
    std::size_t diag = lo > 0 ? row[lo - 1] : row[0];
    if (lo == 0) {
      diag = row[0];
      row[0] = std::min(i, cap);
    } else {
      row[lo - 1] = cap;  // left edge of the band for this row
    }
    std::size_t best = lo == 0 ? row[0] : cap;
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      const std::size_t up = row[j];
      const std::size_t left = row[j - 1];
      std::size_t v = std::min(up, left) + 1;
      v = std::min(v, diag + (a[i - 1] == b[j - 1] ? 0 : 1));
      row[j] = std::min(v, cap);
      best = std::min(best, row[j]);
      diag = up;
    }
    if (best > d) return std::nullopt;
  }
  return row[m] <= d ? std::optional<std::size_t>(row[m]) : std::nullopt;
}

bool within_distance(std::u32string_view a, std::u32string_view b, std::size_t d) {
  return bounded_distance(a, b, d).has_value();
}

bool within_distance(std::string_view a, std::string_view b, std::size_t d,
                     CaseMode mode) {
  return within_distance(prepare(a, mode), prepare(b, mode), d);
}

}  // namespace cryptext
