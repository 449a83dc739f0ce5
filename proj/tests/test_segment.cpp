// Copyright 2026 The Curator Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "curator/error.hpp"
#include "curator/segment.hpp"
#include "oracles.hpp"

using namespace curator;

namespace {

std::string concat(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& p : pieces) out += p;
  return out;
}

}  // namespace

TEST(Segment, ScoresKnownAndUnknownWords) {
  SegmentationModel m({{"the", 60}, {"cat", 30}, {"at", 10}});
  EXPECT_DOUBLE_EQ(m.total(), 100.0);
  EXPECT_NEAR(m.score("the"), std::log(0.6), 1e-12);
  EXPECT_NEAR(m.score("zz"), std::log(10.0 / (100.0 * 100.0)), 1e-12);
  EXPECT_NEAR(m.score("q"), std::log(10.0 / (100.0 * 10.0)), 1e-12);
  // Long unknown words stay finite.
  EXPECT_TRUE(std::isfinite(m.score(std::string(500, 'x'))));
}

TEST(Segment, SplitsConcatenatedWords) {
  SegmentationModel m({{"the", 60}, {"cat", 30}, {"at", 10}});
  EXPECT_EQ(m.segment("thecat"), (std::vector<std::string>{"the", "cat"}));
  EXPECT_EQ(m.segment("x"), (std::vector<std::string>{"x"}));
  EXPECT_TRUE(m.segment("").empty());
}

TEST(Segment, ParseValidatesInput) {
  std::istringstream ok("a\t3\nb\t2\n");
  EXPECT_EQ(SegmentationModel::parse(ok, "mem").vocabulary_size(), 2u);
  std::istringstream zero("a\t0\n");
  EXPECT_THROW(SegmentationModel::parse(zero, "mem"), FormatError);
  std::istringstream dup("a\t1\na\t2\n");
  EXPECT_THROW(SegmentationModel::parse(dup, "mem"), ValidationError);
  std::istringstream junk("a\tlots\n");
  EXPECT_THROW(SegmentationModel::parse(junk, "mem"), FormatError);
}

TEST(Segment, RespectsMaxWordLength) {
  SegmentationModel m({{"abcd", 1000}}, 3);
  for (const auto& p : m.segment("abcdabcd")) EXPECT_LE(p.size(), 3u);
}

// Property: the DP equals exhaustive enumeration over random dictionaries.
TEST(Segment, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(5);
  const std::string alphabet = "abcde";
  auto rand_word = [&](std::size_t max_len) {
    std::string w;
    const std::size_t len = 1 + rng() % max_len;
    for (std::size_t i = 0; i < len; ++i) w += alphabet[rng() % alphabet.size()];
    return w;
  };
  for (int dict = 0; dict < 40; ++dict) {
    std::unordered_map<std::string, std::uint64_t> counts;
    const std::size_t vocab = 5 + rng() % 40;
    while (counts.size() < vocab) counts[rand_word(5)] = 1 + rng() % 5;  // small counts force ties
    SegmentationModel model(counts, 2 + rng() % 6);
    for (int q = 0; q < 50; ++q) {
      const std::string word = rand_word(12);
      auto got = model.segment(word);
      ASSERT_EQ(got, oracle::exhaustive_segment(word, model)) << word;
      ASSERT_EQ(concat(got), word);
    }
  }
}
