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

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curator/corpus_io.hpp"
#include "curator/label.hpp"

namespace curator {

// Selection thresholds for semi-supervised labels. A record is kept when its
// std is below t_std and its averaged score is above t_off (-> OFF) or below
// t_not (-> NOT). All comparisons are strict.
struct ThresholdConfig {
  double t_off = 0.8;
  double t_not = 0.2;
  double t_std = 0.125;

  // Throws ValidationError unless t_off in (0.5, 1], t_not in [0, 0.5),
  // t_std > 0.
  void validate() const;
  // True if every record `tighter` keeps is also kept by *this.
  bool looser_or_equal(const ThresholdConfig& tighter) const;
  // "off0.8_not0.2_std0.125"
  std::string tag() const;
  bool operator==(const ThresholdConfig&) const = default;
};

// The 2 x 2 x 2 grid over t_off {0.8, 0.9}, t_not {0.2, 0.3},
// t_std {0.1, 0.125}, in t_off-major order.
std::vector<ThresholdConfig> default_threshold_grid();

std::optional<Label> classify_semi(const SemiSupRecord& r, const ThresholdConfig& cfg);

// Converts a kept record into a labeled Record (language "en").
Record to_hard_record(const SemiSupRecord& r, Label label);

Dataset filter_semi(std::span<const SemiSupRecord> records, const ThresholdConfig& cfg);
Dataset filter_semi(SemiSupReader& reader, const ThresholdConfig& cfg);

// One pass over the input, one output per config.
std::vector<Dataset> grid_filter(std::span<const SemiSupRecord> records,
                                 std::span<const ThresholdConfig> grid);

struct GridResult {
  ThresholdConfig config;
  std::size_t selected = 0;
  std::filesystem::path path;
};

// Streams `reader` once, writing each config's selection to
// out_dir/semi_<tag>.tsv.
std::vector<GridResult> grid_filter_to_files(SemiSupReader& reader,
                                             std::span<const ThresholdConfig> grid,
                                             const std::filesystem::path& out_dir);

// base followed by extra; throws ValidationError naming the first shared id.
Dataset merge_augmented(const Dataset& base, const Dataset& extra);

}  // namespace curator
