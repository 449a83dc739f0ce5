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

#include "curator/metrics.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "curator/error.hpp"

namespace curator {

namespace {

double ratio(std::size_t num, std::size_t den, bool& undefined) {
  undefined = den == 0;
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void check_same_ids(const LabelMap& gold, const LabelMap& pred) {
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  for (const auto& [id, _] : gold) {
    if (!pred.contains(id)) missing.push_back(id);
  }
  for (const auto& [id, _] : pred) {
    if (!gold.contains(id)) extra.push_back(id);
  }
  if (missing.empty() && extra.empty()) return;
  std::sort(missing.begin(), missing.end());
  std::sort(extra.begin(), extra.end());
  std::string msg = "gold and prediction id sets differ";
  auto list = [&](const char* what, const std::vector<std::string>& ids) {
    if (ids.empty()) return;
    msg += std::string("; ") + what + " (" + std::to_string(ids.size()) + "):";
    for (std::size_t i = 0; i < ids.size() && i < 10; ++i) msg += " " + ids[i];
  };
  list("missing predictions", missing);
  list("unknown ids", extra);
  throw ValidationError(msg);
}

}  // namespace

ClassReport class_report(const LabelMap& gold, const LabelMap& pred) {
  check_same_ids(gold, pred);
  if (gold.empty()) throw ValidationError("cannot score an empty label set");
  ClassReport report;
  report.classes[0].label = Label::kOff;
  report.classes[1].label = Label::kNot;
  report.total = gold.size();
  for (const auto& [id, g] : gold) {
    const Label p = pred.at(id);
    auto& gc = report.classes[g == Label::kOff ? 0 : 1];
    auto& pc = report.classes[p == Label::kOff ? 0 : 1];
    ++gc.support;
    ++pc.predicted;
    if (g == p) {
      ++gc.true_positive;
      ++report.correct;
    } else {
      ++gc.false_negative;
      ++pc.false_positive;
    }
  }
  double sum = 0.0;
  std::size_t present = 0;
  for (auto& c : report.classes) {
    c.precision = ratio(c.true_positive, c.predicted, c.precision_undefined);
    c.recall = ratio(c.true_positive, c.support, c.recall_undefined);
    const double pr = c.precision + c.recall;
    c.f1 = pr == 0.0 ? 0.0 : 2.0 * c.precision * c.recall / pr;
    if (c.support + c.predicted > 0) {
      sum += c.f1;
      ++present;
    }
  }
  report.macro_f1 = sum / static_cast<double>(present);
  return report;
}

double macro_f1(const LabelMap& gold, const LabelMap& pred) { return class_report(gold, pred).macro_f1; }

}  // namespace curator
