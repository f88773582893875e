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

#include <sstream>

#include <gtest/gtest.h>

#include "cryptext/corpus.hpp"
#include "cryptext/error.hpp"
#include "fixtures.hpp"

namespace cryptext {
namespace {

TEST(Rfc3339, Parses) {
  EXPECT_EQ(parse_rfc3339("1970-01-01T00:00:00Z"), 0);
  EXPECT_EQ(parse_rfc3339("1970-01-02"), 86400);
  EXPECT_EQ(parse_rfc3339("2021-11-05T10:00:00Z"), 1636106400);
  EXPECT_EQ(parse_rfc3339("2021-11-05T12:00:00+02:00"), 1636106400);
  EXPECT_EQ(parse_rfc3339("2021-11-05T05:30:00-04:30"), 1636106400);
  EXPECT_EQ(parse_rfc3339("2021-11-05T10:00:00.123456Z"), 1636106400);
  EXPECT_EQ(parse_rfc3339("2021-11-05t10:00:00z"), 1636106400);
  EXPECT_EQ(parse_rfc3339("1969-12-31T23:59:59Z"), -1);
}

TEST(Rfc3339, Rejects) {
  for (const char* bad : {"", "2021", "2021-13-01", "2021-02-30", "2021-11-05T10:00:00",
                          "2021-11-05T24:00:00Z", "2021-11-05T10:00Z", "2021-11-05T10:00:00.Z",
                          "2021-11-05T10:00:00+0200", "yesterday", "2021-1-05"}) {
    EXPECT_FALSE(parse_rfc3339(bad).has_value()) << bad;
  }
}

TEST(Rfc3339, FormatRoundTrip) {
  for (Timestamp t : {Timestamp{0}, Timestamp{1636106400}, Timestamp{-1}, Timestamp{951782400}}) {
    EXPECT_EQ(parse_rfc3339(format_rfc3339(t)), t);
  }
  EXPECT_EQ(format_rfc3339(-1), "1969-12-31T23:59:59Z");
  EXPECT_EQ(format_date(951782400), "2000-02-29");
}

TEST(ReadCorpus, AutoMixesPlainAndRecords) {
  std::istringstream in(
      "plain line one\n"
      "\n"
      "{\"id\":\"r1\",\"text\":\"record text\",\"timestamp\":\"2021-11-05\",\"source\":\"tw\"}\n"
      "{\"id\":7,\"text\":\"numeric id\",\"timestamp\":\"soon\"}\n"
      "{\"text\":42}\n"
      "{not json\n"
      "bad \xff byte\r\n"
      "{\"text\":\"no id\",\"timestamp\":null}\n");
  const Corpus c = read_corpus(in, CorpusFormat::kAuto, "feed");
  ASSERT_EQ(c.documents.size(), 4u);
  EXPECT_EQ(c.documents[0].id, "feed:1");
  EXPECT_EQ(c.documents[0].text, "plain line one");
  EXPECT_EQ(c.documents[1].id, "r1");
  EXPECT_EQ(c.documents[1].source, "tw");
  EXPECT_EQ(c.documents[1].timestamp, parse_rfc3339("2021-11-05"));
  EXPECT_EQ(c.documents[2].id, "7");
  EXPECT_FALSE(c.documents[2].timestamp.has_value());
  EXPECT_TRUE(c.documents[2].bad_timestamp);
  EXPECT_EQ(c.documents[3].id, "feed:8");
  EXPECT_FALSE(c.documents[3].bad_timestamp);
  EXPECT_EQ(c.report.documents, 4u);
  EXPECT_EQ(c.report.malformed, 3u);
  EXPECT_EQ(c.report.bad_timestamps, 1u);
  ASSERT_EQ(c.report.samples.size(), 3u);
  EXPECT_EQ(c.report.samples[0].line, 5u);
  EXPECT_EQ(c.report.samples[2].reason, "invalid UTF-8");
}

TEST(ReadCorpus, ExplicitFormats) {
  std::istringstream plain("{\"text\":\"literal\"}\n");
  const Corpus p = read_corpus(plain, CorpusFormat::kPlain);
  ASSERT_EQ(p.documents.size(), 1u);
  EXPECT_EQ(p.documents[0].text, "{\"text\":\"literal\"}");

  std::istringstream records("not a record\n");
  const Corpus r = read_corpus(records, CorpusFormat::kRecords);
  EXPECT_TRUE(r.documents.empty());
  EXPECT_EQ(r.report.malformed, 1u);
  EXPECT_EQ(parse_corpus_format("jsonl"), CorpusFormat::kRecords);
  EXPECT_FALSE(parse_corpus_format("xml").has_value());
}

TEST(ReadCorpus, Files) {
  testing::TempDir dir;
  testing::write_text(dir / "a.txt", "one\ntwo\n");
  testing::write_text(dir / "b.txt", "three\n\xc3\n");
  const Corpus c = read_corpus_files({dir / "a.txt", dir / "b.txt"});
  ASSERT_EQ(c.documents.size(), 3u);
  EXPECT_EQ(c.documents[2].id, "b.txt:1");
  EXPECT_EQ(c.report.malformed, 1u);
  EXPECT_EQ(c.report.samples[0].source, "b.txt");
  try {
    read_corpus_file(dir / "missing.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace cryptext
