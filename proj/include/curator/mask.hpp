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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>

#include "curator/corpus_io.hpp"

namespace curator {

// Lowercase offensive terms.
class WordList {
 public:
  WordList() = default;

  // One term per line; terms are lowercased. Blank lines are skipped.
  // Throws ValidationError for terms containing whitespace.
  static WordList load(const std::filesystem::path& path);
  static WordList parse(std::istream& in, std::string_view source);

  void insert(std::string_view term);
  // `key` must already be lowercased and punctuation-stripped.
  bool contains(std::string_view key) const { return terms_.contains(std::string(key)); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

 private:
  std::unordered_set<std::string> terms_;
};

struct MaskOptions {
  double p = 0.5;
  std::uint64_t seed = 42;
  std::string pad_token = "[PAD]";
};

// Lowercased, leading/trailing-punctuation-stripped form used for lookup.
std::string mask_key(std::string_view token);

// Replaces each whitespace token whose key is listed with pad_token, each
// independently with probability p. Whitespace is preserved. Training-time
// augmentation only: never apply to evaluation or inference data.
std::string mask_offensive(std::string_view text, const WordList& list, const MaskOptions& options);

// Applies mask_offensive to every record with seed record_seed(seed, id), so
// the result does not depend on record order or thread count.
Dataset mask_dataset(const Dataset& ds, const WordList& list, const MaskOptions& options,
                     std::size_t threads = 1);

}  // namespace curator
