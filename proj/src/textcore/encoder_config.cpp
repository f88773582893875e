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

#include <fstream>
#include <sstream>

#include "cryptext/checksum.hpp"
#include "cryptext/error.hpp"
#include "cryptext/textcore.hpp"
#include "cryptext/utf8.hpp"

namespace cryptext {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidConfig, "encoder config: " + what);
}

bool is_lower_ascii(char32_t cp) { return cp >= 'a' && cp <= 'z'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

EncoderConfig::EncoderConfig(VisualMap visual_map, DigitGroups digit_groups,
                             std::set<char> skip_set,
                             std::set<char32_t> strip_chars, int min_digits)
    : visual_map_(std::move(visual_map)),
      strip_(std::move(strip_chars)),
      min_digits_(min_digits) {
  if (min_digits_ < 0 || min_digits_ > 16) invalid("min_digits out of range");
  for (const auto& [src, dst] : visual_map_) {
    if (!is_lower_ascii(dst)) invalid("visual_map targets must be a..z");
    if (src == '#' || src == '=') invalid("'#' and '=' cannot be visual symbols");
    if (utf8::is_combining_mark(src)) invalid("combining marks cannot be mapped");
  }
  for (const auto& [src, dst] : visual_map_) {
    (void)src;
    if (visual_map_.contains(dst)) invalid("visual_map target is also a source");
  }
  digits_.fill('\0');
  for (const auto& [letter, digit] : digit_groups) {
    if (letter < 'a' || letter > 'z') invalid("digit_groups keys must be a..z");
    if (digit < '1' || digit > '9') invalid("digits must be 1..9");
    digits_[static_cast<std::size_t>(letter - 'a')] = digit;
  }
  for (char letter : skip_set) {
    if (letter < 'a' || letter > 'z') invalid("skip letters must be a..z");
    auto& slot = digits_[static_cast<std::size_t>(letter - 'a')];
    if (slot != '\0') invalid(std::string("letter in both skip and digit_groups: ") + letter);
    slot = '0';
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] == '\0') {
      invalid(std::string("letter neither grouped nor skipped: ") +
              static_cast<char>('a' + i));
    }
  }
  for (char32_t cp : strip_) {
    if (utf8::is_letter(cp) || cp == '#' || cp == ' ') {
      invalid("strip characters must be non-letter symbols other than '#'");
    }
    if (visual_map_.contains(cp)) invalid("a character cannot be both stripped and mapped");
  }
  hash_ = fnv1a64(serialize());
}

const EncoderConfig& EncoderConfig::standard() {
  static const EncoderConfig config(
      {{U'1', U'l'}, {U'!', U'i'}, {U'|', U'l'}, {U'0', U'o'},
       {U'@', U'a'}, {U'4', U'a'}, {U'$', U's'}, {U'5', U's'},
       {U'3', U'e'}, {U'7', U't'}, {U'8', U'b'}, {U'+', U't'}},
      {{'b', '1'}, {'f', '1'}, {'p', '1'}, {'v', '1'},
       {'c', '2'}, {'g', '2'}, {'j', '2'}, {'k', '2'},
       {'q', '2'}, {'s', '2'}, {'x', '2'}, {'z', '2'},
       {'d', '3'}, {'t', '3'}, {'l', '4'}, {'m', '5'},
       {'n', '5'}, {'r', '6'}},
      {'a', 'e', 'i', 'o', 'u', 'h', 'w', 'y'},
      {U'-', U'\'', U'.', U'_', U'’'});
  return config;
}

char32_t EncoderConfig::visual_target(char32_t cp) const noexcept {
  auto it = visual_map_.find(cp);
  return it == visual_map_.end() ? cp : it->second;
}

char EncoderConfig::digit_for(char32_t cp) const noexcept {
  if (cp >= 'a' && cp <= 'z') return digits_[cp - 'a'];
  return '0';
}

std::string EncoderConfig::serialize() const {
  std::string out = "[visual_map]\n";
  for (const auto& [src, dst] : visual_map_) {
    utf8::append(out, src);
    out += '=';
    utf8::append(out, dst);
    out += '\n';
  }
  out += "[digit_groups]\n";
  for (char digit = '1'; digit <= '9'; ++digit) {
    std::string letters;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] == digit) letters += static_cast<char>('a' + i);
    }
    if (!letters.empty()) out += letters + '=' + digit + '\n';
  }
  out += "[skip]\n";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] == '0') out += static_cast<char>('a' + i);
  }
  out += "\n[strip]\n";
  for (char32_t cp : strip_) utf8::append(out, cp);
  out += "\n[options]\nmin_digits=" + std::to_string(min_digits_) + "\n";
  return out;
}

std::string EncoderConfig::hash_hex() const { return hex16(hash_); }

EncoderConfig EncoderConfig::parse(std::string_view text) {
  if (!utf8::is_valid(text)) invalid("not valid UTF-8");
  VisualMap visual;
  DigitGroups groups;
  std::set<char> skip;
  std::set<char32_t> strip;
  int min_digits = 3;

  std::string section;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw_line; std::getline(in, raw_line);) {
    ++line_no;
    const std::string_view line = trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (line.front() == '[' && line.back() == ']') {
      section = std::string(line.substr(1, line.size() - 2));
      if (section != "visual_map" && section != "digit_groups" &&
          section != "skip" && section != "strip" && section != "options") {
        invalid("unknown section [" + section + "]" + where);
      }
      continue;
    }
    if (section == "visual_map") {
      auto src = utf8::decode(line, 0);
      if (!src || src->length >= line.size() || line[src->length] != '=') {
        invalid("expected src=dst" + where);
      }
      const auto dst_text = line.substr(src->length + 1);
      auto dst = utf8::decode(dst_text, 0);
      if (!dst || dst->length != dst_text.size()) invalid("expected one target" + where);
      if (!visual.emplace(src->cp, dst->cp).second) invalid("duplicate source" + where);
    } else if (section == "digit_groups") {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos || eq + 2 != line.size()) {
        invalid("expected letters=digit" + where);
      }
      for (char letter : line.substr(0, eq)) {
        if (!groups.emplace(letter, line[eq + 1]).second) {
          invalid("letter grouped twice" + where);
        }
      }
    } else if (section == "skip") {
      for (char letter : line) skip.insert(letter);
    } else if (section == "strip") {
      for (char32_t cp : utf8::to_u32(line)) strip.insert(cp);
    } else if (section == "options") {
      if (line.substr(0, 11) != "min_digits=") invalid("unknown option" + where);
      try {
        min_digits = std::stoi(std::string(line.substr(11)));
      } catch (const std::exception&) {
        invalid("bad min_digits" + where);
      }
    } else {
      invalid("entry outside of a section" + where);
    }
  }
  return EncoderConfig(std::move(visual), std::move(groups), std::move(skip),
                       std::move(strip), min_digits);
}

EncoderConfig EncoderConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace cryptext
