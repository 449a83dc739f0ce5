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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "curator/corpus_io.hpp"

namespace curator {

// The k best models by validation score, best first; equal scores keep
// model-id order. Throws ValidationError if k exceeds the number of models.
std::vector<std::string> select_top_models(const std::map<std::string, double>& scores, std::size_t k);

// Label-level majority vote. Every set must cover the same ids; the result
// follows the first set's order. An exact tie resolves to OFF.
PredictionSet majority_vote(std::span<const PredictionSet> sets);

}  // namespace curator
