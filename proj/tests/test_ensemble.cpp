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

#include <algorithm>
#include <random>

#include "curator/ensemble.hpp"
#include "curator/error.hpp"
#include "oracles.hpp"

using namespace curator;

namespace {

PredictionSet make_set(std::string model, std::vector<Label> labels) {
  PredictionSet s{std::move(model), {}};
  for (std::size_t i = 0; i < labels.size(); ++i) s.predictions.push_back({"id" + std::to_string(i), labels[i]});
  return s;
}

}  // namespace

TEST(SelectModels, Examples) {
  std::map<std::string, double> scores{{"m1", 0.78}, {"m2", 0.77}, {"m3", 0.779}, {"m4", 0.76}};
  EXPECT_EQ(select_top_models(scores, 3), (std::vector<std::string>{"m1", "m3", "m2"}));
  EXPECT_EQ(select_top_models(scores, 4), (std::vector<std::string>{"m1", "m3", "m2", "m4"}));
  EXPECT_THROW(select_top_models(scores, 5), ValidationError);
  std::map<std::string, double> tied{{"b", 0.5}, {"a", 0.5}, {"c", 0.5}};
  EXPECT_EQ(select_top_models(tied, 2), (std::vector<std::string>{"a", "b"}));
}

TEST(Vote, Examples) {
  const auto O = Label::kOff, N = Label::kNot;
  std::vector<PredictionSet> three{make_set("a", {O}), make_set("b", {O}), make_set("c", {N})};
  EXPECT_EQ(majority_vote(three).predictions[0].label, O);
  std::vector<PredictionSet> two{make_set("a", {O}), make_set("b", {N})};
  EXPECT_EQ(majority_vote(two).predictions[0].label, O);
  std::vector<PredictionSet> one{make_set("a", {O, N, N})};
  auto single = majority_vote(one);
  EXPECT_EQ(single.model_id, "majority_vote");
  EXPECT_EQ(single.predictions, one[0].predictions);
}

TEST(Vote, CoverageMismatchListsIds) {
  const auto O = Label::kOff;
  std::vector<PredictionSet> sets{make_set("a", {O, O, O}), make_set("b", {O, O})};
  try {
    majority_vote(sets);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("missing: id2"), std::string::npos) << e.what();
  }
  sets[1].predictions.push_back({"id0", O});
  EXPECT_THROW(majority_vote(sets), ValidationError);
  EXPECT_THROW(majority_vote({}), ValidationError);
}

// Property: equals a brute-force tally, is permutation invariant and
// respects unanimity; id order of later sets does not matter.
TEST(Vote, MatchesTallyOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t models = 1 + rng() % 5;
    const std::size_t n = 1 + rng() % 30;
    std::vector<PredictionSet> sets;
    for (std::size_t m = 0; m < models; ++m) {
      std::vector<Label> labels(n);
      for (auto& l : labels) l = rng() % 2 ? Label::kOff : Label::kNot;
      sets.push_back(make_set("m" + std::to_string(m), labels));
    }
    auto result = majority_vote(sets);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Label> votes;
      for (const auto& s : sets) votes.push_back(s.predictions[i].label);
      ASSERT_EQ(result.predictions[i].label, oracle::tally(votes));
    }
    auto shuffled = sets;
    std::shuffle(shuffled.begin() + 1, shuffled.end(), rng);
    for (std::size_t m = 1; m < shuffled.size(); ++m) {
      std::shuffle(shuffled[m].predictions.begin(), shuffled[m].predictions.end(), rng);
    }
    EXPECT_EQ(majority_vote(shuffled), result);
  }
}
