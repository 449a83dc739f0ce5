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

#include <random>
#include <set>
#include <sstream>

#include "curator/error.hpp"
#include "curator/semisup.hpp"
#include "test_util.hpp"

using namespace curator;
using curator::testing::TempDir;

namespace {

std::vector<SemiSupRecord> synthetic(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Values on a 0.05 grid land exactly on thresholds often enough to exercise
  // the strict comparisons.
  std::uniform_int_distribution<int> avg(0, 20), sd(0, 6);
  std::vector<SemiSupRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"s" + std::to_string(i), "text " + std::to_string(i), avg(rng) * 0.05, sd(rng) * 0.025});
  }
  return out;
}

std::set<std::string> ids(const Dataset& ds) {
  std::set<std::string> out;
  for (const auto& r : ds.records) out.insert(r.id);
  return out;
}

}  // namespace

TEST(Classify, Examples) {
  const ThresholdConfig cfg{0.9, 0.2, 0.1};
  EXPECT_EQ(classify_semi({"a", "t", 0.95, 0.05}, cfg), Label::kOff);
  EXPECT_EQ(classify_semi({"b", "t", 0.85, 0.05}, cfg), std::nullopt);
  EXPECT_EQ(classify_semi({"c", "t", 0.1, 0.1}, cfg), std::nullopt);
  EXPECT_EQ(classify_semi({"d", "t", 0.1, 0.09}, cfg), Label::kNot);
  EXPECT_EQ(classify_semi({"e", "t", 0.9, 0.0}, cfg), std::nullopt);
  EXPECT_EQ(classify_semi({"f", "t", 0.2, 0.0}, cfg), std::nullopt);
}

TEST(Thresholds, ValidationAndGrid) {
  EXPECT_THROW((ThresholdConfig{0.5, 0.2, 0.1}.validate()), ValidationError);
  EXPECT_THROW((ThresholdConfig{0.8, 0.5, 0.1}.validate()), ValidationError);
  EXPECT_THROW((ThresholdConfig{0.8, 0.2, 0.0}.validate()), ValidationError);
  auto grid = default_threshold_grid();
  ASSERT_EQ(grid.size(), 8u);
  EXPECT_EQ(grid.front(), (ThresholdConfig{0.8, 0.2, 0.1}));
  EXPECT_EQ(grid.back(), (ThresholdConfig{0.9, 0.3, 0.125}));
  EXPECT_EQ(grid.front().tag(), "off0.8_not0.2_std0.1");
}

TEST(Filter, EmptyInputAndSingleConfig) {
  auto grid = default_threshold_grid();
  auto out = grid_filter({}, grid);
  ASSERT_EQ(out.size(), 8u);
  for (const auto& ds : out) EXPECT_TRUE(ds.empty());

  auto recs = synthetic(500, 1);
  const ThresholdConfig cfg{0.8, 0.2, 0.1};
  EXPECT_EQ(grid_filter(recs, std::span(&cfg, 1)).front(), filter_semi(recs, cfg));
}

// Property: grid output equals a per-record predicate check; labels are
// consistent; looser configs select supersets.
TEST(Filter, GridMatchesBruteForceAndIsMonotone) {
  auto recs = synthetic(20000, 2);
  auto grid = default_threshold_grid();
  auto out = grid_filter(recs, grid);
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const auto& cfg = grid[c];
    Dataset expected;
    for (const auto& r : recs) {
      const bool conf = r.std < cfg.t_std;
      if (conf && r.avg_score > cfg.t_off) expected.records.push_back({r.id, r.text, "en", Label::kOff});
      else if (conf && r.avg_score < cfg.t_not) expected.records.push_back({r.id, r.text, "en", Label::kNot});
    }
    EXPECT_EQ(out[c], expected) << cfg.tag();
    for (const auto& r : out[c].records) {
      EXPECT_TRUE(r.label == Label::kOff || r.label == Label::kNot);
    }
  }
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = 0; b < grid.size(); ++b) {
      if (!grid[b].looser_or_equal(grid[a])) continue;
      auto tight = ids(out[a]);
      auto loose = ids(out[b]);
      EXPECT_TRUE(std::includes(loose.begin(), loose.end(), tight.begin(), tight.end()))
          << grid[a].tag() << " vs " << grid[b].tag();
    }
  }
}

TEST(Filter, StreamingFilesEqualInMemory) {
  TempDir dir;
  auto recs = synthetic(3000, 3);
  write_semisup_tsv(recs, dir / "semi.tsv");
  auto grid = default_threshold_grid();
  SemiSupReader reader(dir / "semi.tsv");
  auto results = grid_filter_to_files(reader, grid, dir / "out");
  auto expected = grid_filter(recs, grid);
  ASSERT_EQ(results.size(), grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    EXPECT_EQ(results[c].selected, expected[c].size());
    EXPECT_EQ(results[c].path.filename(), "semi_" + grid[c].tag() + ".tsv");
    EXPECT_EQ(read_olid_tsv(results[c].path, "en"), expected[c]);
  }
}

TEST(Merge, ConcatenatesBaseFirst) {
  Dataset base, extra;
  for (int i = 0; i < 10; ++i) base.records.push_back({"b" + std::to_string(i), "x", "da", Label::kNot});
  for (int i = 0; i < 5; ++i) extra.records.push_back({"e" + std::to_string(i), "y", "en", Label::kOff});
  auto merged = merge_augmented(base, extra);
  ASSERT_EQ(merged.size(), 15u);
  EXPECT_EQ(merged.records[0].id, "b0");
  EXPECT_EQ(merged.records[10].id, "e0");
  EXPECT_EQ(merge_augmented(base, Dataset{}), base);

  extra.records.push_back({"b3", "z", "en", Label::kOff});
  try {
    merge_augmented(base, extra);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("b3"), std::string::npos);
  }
}
