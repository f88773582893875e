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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

// Minimal UTF-8 and code point utilities. Only the slices of Unicode that show
// up in social-media perturbations are modelled (Latin, Greek, Cyrillic and a
// handful of CJK/Hangul/kana blocks); everything else is treated as symbol.
namespace cryptext::utf8 {

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed
};

// Decodes one code point starting at `pos`. Returns nullopt on malformed or
// overlong sequences, surrogates, and values above U+10FFFF.
std::optional<Decoded> decode(std::string_view text, std::size_t pos) noexcept;

bool is_valid(std::string_view text) noexcept;

void append(std::string& out, char32_t cp);

std::u32string to_u32(std::string_view text);
std::string from_u32(std::u32string_view text);

bool is_letter(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_combining_mark(char32_t cp) noexcept;

// Simple one-to-one lowercase mapping (ASCII, Latin-1, Latin Extended-A,
// basic Greek and Cyrillic).
char32_t to_lower(char32_t cp) noexcept;

std::u32string casefold(std::u32string_view text);
std::string casefold(std::string_view text);

// Base ASCII spelling of a precomposed Latin letter ("é" -> "e", "ß" -> "ss"),
// or an empty view when no decomposition is known.
std::string_view ascii_base(char32_t cp) noexcept;

}  // namespace cryptext::utf8
