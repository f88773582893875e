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

#include <random>

#include <gtest/gtest.h>

#include "cryptext/error.hpp"
#include "cryptext/textcore.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

namespace cryptext {
namespace {

std::vector<std::string> raws(const std::vector<TokenSpan>& spans) {
  std::vector<std::string> out;
  for (const auto& s : spans) out.push_back(s.raw);
  return out;
}

TEST(Tokenize, CaptionSentence) {
  const auto spans = tokenize("the dirrty republicans");
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(raws(spans), (std::vector<std::string>{"the", "dirrty", "republicans"}));
  EXPECT_EQ(spans[1].start, 4u);
  EXPECT_EQ(spans[1].end, 10u);
  for (const auto& s : spans) EXPECT_TRUE(s.is_word);
}

TEST(Tokenize, KeepsVisualSymbolsInsideTokens) {
  EXPECT_EQ(raws(tokenize("the dirty republic@@ns!")),
            (std::vector<std::string>{"the", "dirty", "republic@@ns"}));
  EXPECT_EQ(raws(tokenize("h!gh, l0ve; $ex")), (std::vector<std::string>{"h!gh", "l0ve", "$ex"}));
}

TEST(Tokenize, TrimsEdgePunctuation) {
  EXPECT_EQ(raws(tokenize("'quoted' -dash- wow!!! |x|")),
            (std::vector<std::string>{"quoted", "dash", "wow", "x"}));
  EXPECT_EQ(raws(tokenize("don't well-known")),
            (std::vector<std::string>{"don't", "well-known"}));
}

TEST(Tokenize, NumbersAreTokensButNotWords) {
  const auto spans = tokenize("in 2020 we had 100 votes");
  ASSERT_EQ(spans.size(), 6u);
  EXPECT_FALSE(spans[1].is_word);
  EXPECT_FALSE(spans[4].is_word);
  EXPECT_TRUE(spans[5].is_word);
}

TEST(Tokenize, InvalidUtf8SeparatesTokens) {
  const std::string text = std::string("ab") + '\xff' + "cd";
  EXPECT_EQ(raws(tokenize(text)), (std::vector<std::string>{"ab", "cd"}));
}

TEST(Tokenize, UnicodeLettersAndMarks) {
  EXPECT_EQ(raws(tokenize("café naïve e\xcc\x81t\xc3\xa9")),
            (std::vector<std::string>{"café", "naïve", "e\xcc\x81t\xc3\xa9"}));
}

TEST(Tokenize, SpansCoverSourceBytes) {
  const std::string text = "  R3publ1cans, are   th3 w0rst!!";
  for (const auto& s : tokenize(text)) {
    EXPECT_EQ(text.substr(s.start, s.end - s.start), s.raw);
  }
}

TEST(Canonicalize, VisualMapAndFolding) {
  EXPECT_EQ(canonicalize("republic@@ns"), "republicaans");
  EXPECT_EQ(canonicalize("repubLIEcans"), "republiecans");
  EXPECT_EQ(canonicalize("h!gh"), "high");
  EXPECT_EQ(canonicalize("$3x"), "sex");
  EXPECT_EQ(canonicalize("Straße"), "strasse");
  EXPECT_EQ(canonicalize("Cafe\xcc\x81"), "cafe");
  EXPECT_EQ(canonicalize("don't"), "dont");
  EXPECT_EQ(canonicalize("well-known"), "wellknown");
}

TEST(Canonicalize, Idempotent) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "abcXYZ@!|0135$78+-'._é";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const int n = 1 + static_cast<int>(rng() % 10);
    for (int j = 0; j < n; ++j) {
      // Pick whole code points: "é" is the only multi-byte entry.
      const std::size_t pick = rng() % (alphabet.size() - 1);
      s += pick == alphabet.size() - 2 ? std::string("é") : std::string(1, alphabet[pick]);
    }
    const std::string once = canonicalize(s);
    EXPECT_EQ(canonicalize(once), once) << s;
  }
}

// Reference keys for the common example words.
TEST(Encode, ReferenceAnchors) {
  EXPECT_EQ(encode("the", 1).text, "TH000");
  EXPECT_EQ(encode("thee", 1).text, "TH000");
  EXPECT_EQ(encode("dirty", 1).text, "DI630");
  EXPECT_EQ(encode("dirrrty", 1).text, "DI630");
  EXPECT_EQ(encode("dirrty", 1).text, "DI630");
  EXPECT_EQ(encode("lesbian", 0).text, "L215");
  EXPECT_EQ(encode("losbian", 0).text, "L215");
  EXPECT_NE(encode("lesbian", 1).text, encode("losbian", 1).text);
}

TEST(Encode, SampleRowThreeSharesOneKey) {
  const auto key = encode("republicans", 1);
  EXPECT_EQ(encode("repubLIEcans", 1), key);
  EXPECT_EQ(encode("republic@@ns", 1), key);
  EXPECT_EQ(key.level, 1);
  EXPECT_EQ(key.text, "RE114252");
}

TEST(Encode, PadsShortTokens) {
  EXPECT_EQ(encode("a", 2).text, "A00000");
  EXPECT_EQ(encode("ox", 1).text, "OX000");
}

TEST(Encode, EmptyTokenErrors) {
  for (const char* raw : {"", "2", "269", "--", "#"}) {
    try {
      encode(raw, 1);
      FAIL() << raw;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kEmptyToken) << raw;
    }
    EXPECT_FALSE(try_encode(raw, 1).has_value());
  }
  // Digits in the visual map are letters once canonicalized.
  EXPECT_EQ(encode("100", 0).text, "L000");
}

TEST(Encode, MatchesTextbookOracleOnPlainWords) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const std::string w = testing::random_word(rng, 1, 12);
    for (int k = 0; k <= 2; ++k) {
      EXPECT_EQ(encode(w, k).text, testing::oracle_key(w, k)) << w << " k=" << k;
    }
  }
}

TEST(Encode, RepeatedLettersCollapse) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const std::string w = testing::random_word(rng, 3, 10);
    const std::string v = testing::repeat_variant(w, rng);
    EXPECT_EQ(encode(v, 1), encode(w, 1)) << w << " vs " << v;
  }
}

TEST(Encode, VisualVariantsShareKey) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const std::string w = testing::random_word(rng, 3, 10);
    const std::string v = testing::visual_variant(w, rng);
    if (v.empty()) continue;
    EXPECT_EQ(encode(v, 2), encode(w, 2)) << w << " vs " << v;
  }
}

TEST(Encode, HigherLevelRefinesLower) {
  // Equal keys at level k+1 imply equal keys at level k.
  std::mt19937_64 rng(14);
  std::vector<std::string> words;
  for (int i = 0; i < 3000; ++i) words.push_back(testing::random_word(rng, 2, 6));
  std::map<std::string, std::string> seen;
  for (const auto& w : words) {
    const auto [it, fresh] = seen.emplace(encode(w, 2).text, encode(w, 1).text);
    if (!fresh) {
      EXPECT_EQ(it->second, encode(w, 1).text) << w;
    }
  }
}

TEST(Encode, CaseInsensitive) {
  EXPECT_EQ(encode("REPUBLICANS", 1), encode("republicans", 1));
  EXPECT_EQ(encode("RePuBlIcAnS", 2), encode("republicans", 2));
}

TEST(Encode, NegativeLevelRejected) {
  EXPECT_THROW(encode("abc", -1), Error);
}

TEST(EncoderConfig, StandardRoundTripsThroughText) {
  const EncoderConfig& std_config = EncoderConfig::standard();
  const EncoderConfig parsed = EncoderConfig::parse(std_config.serialize());
  EXPECT_EQ(parsed, std_config);
  EXPECT_EQ(parsed.hash(), std_config.hash());
  EXPECT_EQ(std_config.hash_hex().size(), 16u);
}

TEST(EncoderConfig, DigitTable) {
  const EncoderConfig& c = EncoderConfig::standard();
  EXPECT_EQ(c.digit_for('b'), '1');
  EXPECT_EQ(c.digit_for('q'), '2');
  EXPECT_EQ(c.digit_for('t'), '3');
  EXPECT_EQ(c.digit_for('l'), '4');
  EXPECT_EQ(c.digit_for('n'), '5');
  EXPECT_EQ(c.digit_for('r'), '6');
  EXPECT_EQ(c.digit_for('a'), '0');
  EXPECT_EQ(c.digit_for(U'ж'), '0');
  EXPECT_EQ(c.visual_target('@'), U'a');
  EXPECT_EQ(c.visual_target('x'), U'x');
}

TEST(EncoderConfig, RejectsInvalidTables) {
  // 'z' is missing from both digit groups and skip set.
  EXPECT_THROW(EncoderConfig::parse("[digit_groups]\nb=1\n[skip]\na\n"), Error);
  const auto bad_target = [] {
    EncoderConfig::VisualMap vm = {{U'@', U'A'}};
    EncoderConfig::DigitGroups dg;
    std::set<char> skip;
    for (char c = 'a'; c <= 'z'; ++c) skip.insert(c);
    EncoderConfig config(vm, dg, skip, {});
  };
  EXPECT_THROW(bad_target(), Error);
}

TEST(EncoderConfig, CustomTableChangesKeysAndHash) {
  std::string text = EncoderConfig::standard().serialize();
  // Move 'l' from group 4 into group 6 alongside 'r'.
  const auto l_line = text.find("\nl=4\n");
  ASSERT_NE(l_line, std::string::npos);
  text.erase(l_line + 1, 4);
  const auto r_line = text.find("\nr=6\n");
  ASSERT_NE(r_line, std::string::npos);
  text.replace(r_line + 1, 3, "lr=6");
  const EncoderConfig custom = EncoderConfig::parse(text);
  EXPECT_NE(custom.hash(), EncoderConfig::standard().hash());
  EXPECT_EQ(encode("lesbian", 0, custom).text, "L215");
  EXPECT_EQ(encode("bl", 0, custom).text, "B600");
}

TEST(Levenshtein, KnownValues) {
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("republicans", "repubLIEcans"), 1u);
  EXPECT_EQ(levenshtein("republicans", "repubLIEcans", CaseMode::kExact), 3u);
  EXPECT_EQ(levenshtein("republicans", "republic@@ns"), 2u);
  EXPECT_EQ(levenshtein("café", "cafe"), 1u);
}

TEST(Levenshtein, MetricLaws) {
  std::mt19937_64 rng(21);
  const std::u32string alphabet = U"ab@1é";
  const auto random_string = [&] {
    std::u32string s;
    const auto n = rng() % 7;
    for (std::size_t i = 0; i < n; ++i) s += alphabet[rng() % alphabet.size()];
    return s;
  };
  for (int i = 0; i < 3000; ++i) {
    const auto a = random_string();
    const auto b = random_string();
    const auto c = random_string();
    const auto ab = levenshtein(a, b);
    EXPECT_EQ(ab, levenshtein(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_LE(levenshtein(a, c), ab + levenshtein(b, c));
    EXPECT_EQ(ab, testing::oracle_distance(a, b));
  }
}

TEST(Levenshtein, BoundedAgreesWithOracle) {
  std::mt19937_64 rng(22);
  const std::u32string alphabet = U"abc@";
  for (int i = 0; i < 5000; ++i) {
    std::u32string a, b;
    for (auto n = rng() % 9; n > 0; --n) a += alphabet[rng() % alphabet.size()];
    for (auto n = rng() % 9; n > 0; --n) b += alphabet[rng() % alphabet.size()];
    const std::size_t d = rng() % 5;
    const std::size_t truth = testing::oracle_distance(a, b);
    EXPECT_EQ(within_distance(a, b, d), truth <= d);
    const auto bounded = bounded_distance(a, b, d);
    if (truth <= d) {
      ASSERT_TRUE(bounded.has_value());
      EXPECT_EQ(*bounded, truth);
    } else {
      EXPECT_FALSE(bounded.has_value());
    }
  }
}

TEST(Levenshtein, FoldModeIgnoresCase) {
  EXPECT_TRUE(within_distance("REPUBLICANS", "republicans", 0));
  EXPECT_FALSE(within_distance("REPUBLICANS", "republicans", 0, CaseMode::kExact));
}

}  // namespace
}  // namespace cryptext
