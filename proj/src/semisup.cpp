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

#include "curator/semisup.hpp"

#include <cstdio>
#include <memory>
#include <unordered_set>

#include "curator/error.hpp"

namespace curator {

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::vector<ThresholdConfig> validated(std::span<const ThresholdConfig> grid) {
  if (grid.empty()) throw ValidationError("threshold grid is empty");
  for (const auto& cfg : grid) cfg.validate();
  return {grid.begin(), grid.end()};
}

}  // namespace

void ThresholdConfig::validate() const {
  if (!(t_off > 0.5 && t_off <= 1.0)) {
    throw ValidationError("t_off must be in (0.5, 1], got " + short_number(t_off));
  }
  if (!(t_not >= 0.0 && t_not < 0.5)) {
    throw ValidationError("t_not must be in [0, 0.5), got " + short_number(t_not));
  }
  if (!(t_std > 0.0)) throw ValidationError("t_std must be positive, got " + short_number(t_std));
}

bool ThresholdConfig::looser_or_equal(const ThresholdConfig& tighter) const {
  return t_off <= tighter.t_off && t_not >= tighter.t_not && t_std >= tighter.t_std;
}

std::string ThresholdConfig::tag() const {
  return "off" + short_number(t_off) + "_not" + short_number(t_not) + "_std" + short_number(t_std);
}

std::vector<ThresholdConfig> default_threshold_grid() {
  std::vector<ThresholdConfig> grid;
  for (double off : {0.8, 0.9}) {
    for (double no : {0.2, 0.3}) {
      for (double sd : {0.1, 0.125}) grid.push_back({off, no, sd});
    }
  }
  return grid;
}

std::optional<Label> classify_semi(const SemiSupRecord& r, const ThresholdConfig& cfg) {
  if (!(r.std < cfg.t_std)) return std::nullopt;
  if (r.avg_score > cfg.t_off) return Label::kOff;
  if (r.avg_score < cfg.t_not) return Label::kNot;
  return std::nullopt;
}

Record to_hard_record(const SemiSupRecord& r, Label label) {
  return Record{r.id, r.text, "en", label};
}

Dataset filter_semi(std::span<const SemiSupRecord> records, const ThresholdConfig& cfg) {
  return std::move(grid_filter(records, std::span(&cfg, 1)).front());
}

Dataset filter_semi(SemiSupReader& reader, const ThresholdConfig& cfg) {
  cfg.validate();
  Dataset out;
  out.provenance.push_back("filter-semi " + cfg.tag());
  SemiSupRecord r;
  while (reader.next(r)) {
    if (auto label = classify_semi(r, cfg)) out.records.push_back(to_hard_record(r, *label));
  }
  return out;
}

std::vector<Dataset> grid_filter(std::span<const SemiSupRecord> records,
                                 std::span<const ThresholdConfig> grid) {
  const auto configs = validated(grid);
  std::vector<Dataset> out(configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c) {
    out[c].provenance.push_back("filter-semi " + configs[c].tag());
  }
  for (const auto& r : records) {
    for (std::size_t c = 0; c < configs.size(); ++c) {
      if (auto label = classify_semi(r, configs[c])) out[c].records.push_back(to_hard_record(r, *label));
    }
  }
  return out;
}

std::vector<GridResult> grid_filter_to_files(SemiSupReader& reader,
                                             std::span<const ThresholdConfig> grid,
                                             const std::filesystem::path& out_dir) {
  const auto configs = validated(grid);
  std::filesystem::create_directories(out_dir);
  std::vector<GridResult> results;
  std::vector<std::unique_ptr<DatasetTsvWriter>> sinks;
  std::unordered_set<std::string> tags;
  for (const auto& cfg : configs) {
    if (!tags.insert(cfg.tag()).second) throw ValidationError("duplicate grid entry " + cfg.tag());
    auto path = out_dir / ("semi_" + cfg.tag() + ".tsv");
    sinks.push_back(std::make_unique<DatasetTsvWriter>(path, /*labeled=*/true));
    results.push_back({cfg, 0, path});
  }
  SemiSupRecord r;
  while (reader.next(r)) {
    for (std::size_t c = 0; c < configs.size(); ++c) {
      if (auto label = classify_semi(r, configs[c])) sinks[c]->write(to_hard_record(r, *label));
    }
  }
  for (std::size_t c = 0; c < configs.size(); ++c) {
    sinks[c]->close();
    results[c].selected = sinks[c]->count();
  }
  return results;
}

Dataset merge_augmented(const Dataset& base, const Dataset& extra) {
  std::unordered_set<std::string_view> ids;
  ids.reserve(base.size());
  for (const auto& r : base.records) ids.insert(r.id);
  for (const auto& r : extra.records) {
    if (!ids.insert(r.id).second) throw ValidationError("duplicate id '" + r.id + "' in merged dataset");
  }
  Dataset out;
  out.records.reserve(base.size() + extra.size());
  out.records = base.records;
  out.records.insert(out.records.end(), extra.records.begin(), extra.records.end());
  out.provenance = base.provenance;
  out.provenance.insert(out.provenance.end(), extra.provenance.begin(), extra.provenance.end());
  return out;
}

}  // namespace curator
