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

#include <array>
#include <cstddef>

#include "curator/corpus_io.hpp"
#include "curator/label.hpp"

namespace curator {

struct ClassScores {
  Label label = Label::kOff;
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
  std::size_t support = 0;    // gold count
  std::size_t predicted = 0;  // predicted count
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Set when the quantity had a zero denominator and was reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

struct ClassReport {
  std::array<ClassScores, 2> classes;  // OFF, NOT
  std::size_t total = 0;
  std::size_t correct = 0;
  double macro_f1 = 0.0;

  const ClassScores& operator[](Label l) const { return classes[l == Label::kOff ? 0 : 1]; }
};

// Per-class precision / recall / F1 over {OFF, NOT}. Undefined ratios are 0.
// Throws ValidationError unless gold and pred have identical, nonempty id
// sets.
ClassReport class_report(const LabelMap& gold, const LabelMap& pred);

// Unweighted mean of the OFF and NOT F1 scores. A class that occurs in neither
// gold nor predictions is left out of the mean.
double macro_f1(const LabelMap& gold, const LabelMap& pred);

}  // namespace curator
