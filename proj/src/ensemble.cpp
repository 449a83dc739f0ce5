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

#include "curator/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "curator/error.hpp"

namespace curator {

std::vector<std::string> select_top_models(const std::map<std::string, double>& scores, std::size_t k) {
  if (k > scores.size()) {
    throw ValidationError("cannot select " + std::to_string(k) + " models from " +
                          std::to_string(scores.size()));
  }
  std::vector<std::pair<std::string, double>> ranked(scores.begin(), scores.end());
  for (const auto& [id, score] : ranked) {
    if (!std::isfinite(score)) throw ValidationError("model '" + id + "' has a non-finite score");
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(ranked[i].first);
  return out;
}

PredictionSet majority_vote(std::span<const PredictionSet> sets) {
  if (sets.empty()) throw ValidationError("majority vote needs at least one prediction set");
  const PredictionSet& first = sets.front();

  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) index.emplace(first.predictions[i].id, i);

  std::vector<std::size_t> off_votes(first.size(), 0);
  for (const auto& set : sets) {
    std::vector<bool> covered(first.size(), false);
    std::vector<std::string> extra;
    for (const auto& p : set.predictions) {
      auto it = index.find(p.id);
      if (it == index.end()) {
        extra.push_back(p.id);
        continue;
      }
      if (covered[it->second]) {
        throw ValidationError("prediction set '" + set.model_id + "' repeats id '" + p.id + "'");
      }
      covered[it->second] = true;
      off_votes[it->second] += p.label == Label::kOff;
    }
    std::vector<std::string> missing;
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (!covered[i]) missing.push_back(first.predictions[i].id);
    }
    if (!missing.empty() || !extra.empty()) {
      std::string msg = "prediction set '" + set.model_id + "' does not cover the id universe of '" +
                        first.model_id + "'";
      auto list = [&](const char* what, const std::vector<std::string>& ids) {
        if (ids.empty()) return;
        msg += std::string("; ") + what + ":";
        for (std::size_t i = 0; i < ids.size() && i < 10; ++i) msg += " " + ids[i];
        if (ids.size() > 10) msg += " ... (" + std::to_string(ids.size()) + " total)";
      };
      list("missing", missing);
      list("unexpected", extra);
      throw ValidationError(msg);
    }
  }

  PredictionSet out;
  out.model_id = "majority_vote";
  out.predictions.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    const std::size_t off = off_votes[i];
    const std::size_t no = sets.size() - off;
    out.predictions.push_back({first.predictions[i].id, off >= no ? Label::kOff : Label::kNot});
  }
  return out;
}

}  // namespace curator
