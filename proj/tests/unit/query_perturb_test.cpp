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

#include <omp.h>

#include <random>

#include <gtest/gtest.h>

#include "cryptext/checksum.hpp"
#include "cryptext/error.hpp"
#include "cryptext/perturb.hpp"
#include "cryptext/query.hpp"
#include "cryptext/serialize.hpp"
#include "fixtures.hpp"

namespace cryptext {
namespace {

using testing::documents;

PhoneticIndex sample_index(int k = 1) { return ingest(testing::sample_corpus(), {k}).indexes.at(k); }

std::vector<std::string> raws(const PerturbationSet& set) {
  std::vector<std::string> out;
  for (const auto& m : set.members) out.push_back(m.raw);
  return out;
}

LookupParams with_d(std::size_t d) {
  LookupParams p;
  p.d = d;
  return p;
}

TEST(Lookup, WorkedExample) {
  const auto index = sample_index();
  const auto d1 = lookup(index, "republicans", with_d(1));
  EXPECT_EQ(d1.key.text, "RE114252");
  EXPECT_EQ(raws(d1), (std::vector<std::string>{"republicans", "repubLIEcans"}));
  EXPECT_EQ(d1.members[1].distance, 1u);
  const auto d3 = lookup(index, "republicans", with_d(3));
  EXPECT_EQ(raws(d3),
            (std::vector<std::string>{"republicans", "repubLIEcans", "republic@@ns"}));
}

TEST(Lookup, CaseSensitiveDistances) {
  const auto index = sample_index();
  LookupParams p = with_d(1);
  p.case_sensitive = true;
  EXPECT_EQ(raws(lookup(index, "republicans", p)), (std::vector<std::string>{"republicans"}));
}

TEST(Lookup, OrderingByCountThenDistance) {
  const auto index = sample_index();
  const auto set = lookup(index, "dirty", with_d(3));
  EXPECT_EQ(raws(set), (std::vector<std::string>{"dirty", "dirrty"}));
  EXPECT_EQ(set.members[0].count, 2u);
}

TEST(Lookup, MinCountFilters) {
  const auto index = sample_index();
  LookupParams p;
  p.min_count = 2;
  EXPECT_EQ(raws(lookup(index, "the", p)), (std::vector<std::string>{"the"}));
  p.min_count = 0;
  EXPECT_THROW(lookup(index, "the", p), Error);
}

TEST(Lookup, Errors) {
  const auto index = sample_index();
  try {
    lookup(index, "", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyToken);
  }
  LookupParams p;
  p.k = 2;
  try {
    lookup(index, "the", p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLevelMismatch);
  }
}

TEST(Lookup, MonotoneInDistance) {
  std::mt19937_64 rng(61);
  std::vector<std::string> texts;
  for (int i = 0; i < 200; ++i) {
    std::string t;
    for (int j = 0; j < 10; ++j) {
      const auto w = testing::random_word(rng, 2, 6);
      t += w + " " + testing::repeat_variant(w, rng) + " ";
    }
    texts.push_back(t);
  }
  const auto index = ingest(documents(texts), {0}).indexes.at(0);
  for (int i = 0; i < 200; ++i) {
    const auto q = testing::random_word(rng, 2, 6);
    LookupParams p;
    p.k = 0;
    std::set<std::string> prev;
    for (std::size_t d = 0; d <= 5; ++d) {
      p.d = d;
      const auto cur = raws(lookup(index, q, p));
      const std::set<std::string> now(cur.begin(), cur.end());
      EXPECT_TRUE(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
      for (const auto& m : lookup(index, q, p).members) {
        EXPECT_EQ(encode(m.raw, 0), encode(q, 0));
        EXPECT_LE(m.distance, d);
      }
      prev = now;
    }
  }
}

TEST(PerturbationsOnly, DropsQueryAndCaseVariants) {
  PhoneticIndex index(1);
  index.add("Republicans");
  index.add("republicans");
  index.add("repubLIEcans");
  EXPECT_EQ(raws(perturbations_only(index, "republicans", {})),
            (std::vector<std::string>{"repubLIEcans"}));
  LookupParams exact;
  exact.case_sensitive = true;
  EXPECT_EQ(raws(perturbations_only(index, "republicans", exact)),
            (std::vector<std::string>{"Republicans", "repubLIEcans"}));
}

TEST(UniformBelow, StaysInRangeAndCoversIt) {
  std::mt19937_64 gen(5);
  std::vector<int> hits(7);
  for (int i = 0; i < 7000; ++i) {
    const auto v = uniform_below(gen, 7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(uniform_below(gen, 1), 0u);
}

TEST(RequestedCount, RoundsHalfUp) {
  EXPECT_EQ(requested_count(0.25, 10), 3u);  // 2.5 -> 3
  EXPECT_EQ(requested_count(0.25, 3), 1u);   // 0.75 -> 1
  EXPECT_EQ(requested_count(0.0, 100), 0u);
  EXPECT_EQ(requested_count(1.0, 7), 7u);
  EXPECT_EQ(requested_count(0.15, 0), 0u);
  EXPECT_EQ(requested_count(0.3, 5), 2u);  // 1.5 -> 2 despite binary 0.3
  EXPECT_EQ(requested_count(0.7, 5), 4u);  // 3.5 -> 4
}

TEST(Perturb, RatioZeroEchoesInput) {
  PerturbRequest r;
  r.ratio = 0.0;
  const auto out = perturb_text("the dirty republicans", sample_index(), r);
  EXPECT_EQ(out.output_text, "the dirty republicans");
  EXPECT_TRUE(out.replacements.empty());
  EXPECT_EQ(out.words, 3u);
}

TEST(Perturb, FullRatioOnSample) {
  PerturbRequest r;
  r.ratio = 1.0;
  r.seed = 9;
  const auto out = perturb_text("The dirty republicans!", sample_index(), r);
  EXPECT_EQ(out.eligible, 3u);
  EXPECT_EQ(out.achieved, 3u);
  ASSERT_EQ(out.replacements.size(), 3u);
  EXPECT_EQ(out.replacements[0].replacement, "thee");
  EXPECT_EQ(out.replacements[1].replacement, "dirrty");
  EXPECT_TRUE(out.replacements[2].replacement == "repubLIEcans" ||
              out.replacements[2].replacement == "republic@@ns");
  EXPECT_EQ(out.output_text, "thee dirrty " + out.replacements[2].replacement + "!");
}

TEST(Perturb, Errors) {
  PerturbRequest r;
  for (double bad : {-0.1, 1.5, std::nan("")}) {
    r.ratio = bad;
    try {
      perturb_text("x", sample_index(), r);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kRatioOutOfRange);
    }
  }
  r.ratio = 0.5;
  r.lookup.k = 0;
  EXPECT_THROW(perturb_text("x", sample_index(), r), Error);
}

TEST(Perturb, DeterministicAndSeedSensitive) {
  const auto index = sample_index();
  const std::string text =
      "the dirty republicans the dirty republicans the dirty republicans the dirty republicans";
  PerturbRequest r;
  r.ratio = 0.5;
  std::set<std::string> outputs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    r.seed = seed;
    const auto a = perturb_text(text, index, r);
    const auto b = perturb_text(text, index, r);
    EXPECT_EQ(wire::dump(wire::to_json(a)), wire::dump(wire::to_json(b)));
    outputs.insert(a.output_text);
  }
  EXPECT_GT(outputs.size(), 10u);
}

TEST(PerturbCorpus, ThreadCountDoesNotMatter) {
  std::vector<std::string> texts;
  for (int i = 0; i < 300; ++i) texts.push_back("the dirty republicans and thee dirrty repubLIEcans");
  const auto docs = documents(texts);
  const auto index = sample_index();
  PerturbRequest r;
  r.ratio = 0.3;
  r.seed = 77;
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = perturb_corpus(docs, index, r);
  omp_set_num_threads(4);
  const auto four = perturb_corpus(docs, index, r);
  omp_set_num_threads(saved);
  ASSERT_EQ(one.documents.size(), four.documents.size());
  for (std::size_t i = 0; i < one.documents.size(); ++i) {
    EXPECT_EQ(one.documents[i].text, four.documents[i].text);
  }
  EXPECT_EQ(one.total_achieved, four.total_achieved);
  EXPECT_EQ(one.total_words, 300u * 7u);
  EXPECT_NEAR(one.achieved_ratio(), 0.3, 0.02);
}

TEST(PerturbCorpus, PerDocumentSeedsDifferByIdAndSkipMalformed) {
  auto docs = documents({"the dirty republicans", "the dirty republicans", std::string("\xff")});
  PerturbRequest r;
  r.ratio = 1.0;
  r.seed = 1;
  const auto out = perturb_corpus(docs, sample_index(), r);
  EXPECT_EQ(out.malformed, 1u);
  ASSERT_EQ(out.manifest.size(), 2u);
  EXPECT_EQ(out.manifest[0].doc_id, "doc0");
  EXPECT_NE(document_seed(1, "doc0"), document_seed(1, "doc1"));
  EXPECT_EQ(document_seed(1, "doc0"), 1 ^ fnv1a64("doc0"));
}

}  // namespace
}  // namespace cryptext
