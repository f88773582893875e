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
#include <json.hpp>

#include "cryptext/cli.hpp"
#include "cryptext/index.hpp"
#include "fixtures.hpp"

namespace cryptext::cli {
namespace {

using Json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "cryptext");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = (dir_ / "corpus.txt").string();
    index_ = (dir_ / "idx").string();
    testing::write_text(corpus_,
                        "the dirrty republicans\nthee dirty repubLIEcans\n"
                        "the dirty republic@@ns\n");
    const Outcome built = invoke({"build-index", "--corpus", corpus_, "--out", index_});
    ASSERT_EQ(built.code, 0) << built.err;
  }

  testing::TempDir dir_;
  std::string corpus_;
  std::string index_;
};

TEST_F(CliTest, BuildIndexWritesEveryLevel) {
  for (int k : {0, 1, 2}) {
    EXPECT_TRUE(std::filesystem::exists(index_file_name(index_, k))) << k;
  }
  const Outcome o = invoke({"build-index", "--corpus", corpus_, "--out", index_, "--levels",
                            "1", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(Json::parse(o.out)["report"]["documents"], 3);
}

TEST_F(CliTest, LookupRows) {
  const Outcome o = invoke({"lookup", "republicans", "--index", index_, "--d", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "republicans\t1\t0\nrepubLIEcans\t1\t1\n");
}

TEST_F(CliTest, LookupJsonIsStable) {
  const Outcome a = invoke({"lookup", "Republicans", "--index", index_, "--format", "json"});
  const Outcome b = invoke({"lookup", "Republicans", "--index", index_, "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["key"], "RE114252");
  EXPECT_EQ(j["members"].size(), 3u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"lookup", "--index", index_}).code, kExitUsage);
  EXPECT_EQ(invoke({"lookup", "x", "--index", index_, "--k", "99"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  const Outcome missing = invoke({"lookup", "x", "--index", (dir_ / "none").string()});
  EXPECT_EQ(missing.code, kExitError);
  EXPECT_NE(missing.err.find("IoError"), std::string::npos);
  const Outcome empty = invoke({"lookup", "269", "--index", index_});
  EXPECT_EQ(empty.code, kExitError);
  EXPECT_NE(empty.err.find("EmptyToken"), std::string::npos);
  EXPECT_EQ(invoke({"perturb", "--text", "x", "--index", index_, "--format", "json"}).code,
            kExitUsage);
}

TEST_F(CliTest, PerturbZeroRatioEchoesInput) {
  const Outcome o = invoke({"perturb", "--text", "the dirty republicans!", "--index", index_,
                            "--ratio", "0", "--seed", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "the dirty republicans!\n");
}

TEST_F(CliTest, PerturbIsSeeded) {
  const std::vector<std::string> args = {"perturb", "--in",   "-",      "--index", index_,
                                         "--ratio", "1",      "--seed", "9",       "--format",
                                         "json"};
  const std::string lines = "the dirty republicans\nthe dirty republicans\n";
  const Outcome a = invoke(args, lines);
  const Outcome b = invoke(args, lines);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream rows(a.out);
  std::string row;
  int n = 0;
  while (std::getline(rows, row)) {
    EXPECT_EQ(Json::parse(row)["achieved"], 3);
    ++n;
  }
  EXPECT_EQ(n, 2);
}

TEST_F(CliTest, PerturbWithoutSeedReportsIt) {
  const Outcome o = invoke({"perturb", "--text", "the", "--index", index_});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.err.rfind("seed: ", 0), 0u);
}

TEST_F(CliTest, PerturbCorpusWritesManifest) {
  const std::string out = (dir_ / "out.jsonl").string();
  const Outcome o = invoke({"perturb-corpus", "--in", corpus_, "--out", out, "--index", index_,
                            "--ratio", "1", "--seed", "4", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json summary = Json::parse(o.out);
  EXPECT_EQ(summary["documents"], 3);
  EXPECT_EQ(summary["total_words"], 9);
  EXPECT_TRUE(std::filesystem::exists(out + ".manifest.jsonl"));
}

TEST_F(CliTest, NormalizeWithTrainedModel) {
  const std::string dict = (dir_ / "words.txt").string();
  const std::string model = (dir_ / "lm.txt").string();
  testing::write_text(dict, "the\ndirty\nrepublicans\n");
  const Outcome trained = invoke({"train-lm", "--corpus", corpus_, "--out", model});
  ASSERT_EQ(trained.code, 0) << trained.err;
  const Outcome o = invoke({"normalize", "--text", "Th3 dirrty repubLIEcans", "--dict", dict,
                            "--model", model});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "The dirty republicans\n");
}

TEST_F(CliTest, Timeline) {
  const std::string records = (dir_ / "records.jsonl").string();
  testing::write_text(records,
                      "{\"text\":\"the republicans\",\"timestamp\":\"2021-11-01T10:00:00Z\"}\n"
                      "{\"text\":\"repubLIEcans again\",\"timestamp\":\"2021-11-03T10:00:00Z\"}\n"
                      "{\"text\":\"no time republicans\"}\n");
  const Outcome o = invoke({"timeline", "--word", "republicans", "--corpus", records});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out,
            "2021-11-01T00:00:00Z\t1\t1\t\trepublicans=1\n"
            "2021-11-02T00:00:00Z\t0\t0\t\t\n"
            "2021-11-03T00:00:00Z\t1\t1\t\trepubliecans=1\n");
  const Outcome bad = invoke({"timeline", "--word", "x", "--corpus", records, "--from", "nope"});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("UnparseableTimestamp"), std::string::npos);
}

}  // namespace
}  // namespace cryptext::cli
