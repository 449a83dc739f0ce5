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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace curator {

// Unigram language model for splitting concatenated words (hashtags).
//
// A known word scores log(count / total); an unknown word of length n scores
// log(10 / (total * 10^n)), so unknown pieces get rapidly worse with length.
class SegmentationModel {
 public:
  static constexpr std::size_t kDefaultMaxWordLen = 24;
  // Relative gap below which two split scores count as equal.
  static constexpr double kTieTolerance = 1e-12;

  static bool scores_tie(double a, double b);

  SegmentationModel() = default;
  // Throws ValidationError on non-positive counts, empty words, or duplicates.
  explicit SegmentationModel(std::unordered_map<std::string, std::uint64_t> counts,
                             std::size_t max_word_len = kDefaultMaxWordLen);

  // Frequency table: word \t count per line.
  static SegmentationModel load(const std::filesystem::path& path,
                                std::size_t max_word_len = kDefaultMaxWordLen);
  static SegmentationModel parse(std::istream& in, std::string_view source,
                                 std::size_t max_word_len = kDefaultMaxWordLen);

  double score(std::string_view word) const;

  // Best split of `word` into pieces of at most max_word_len() characters.
  // Ties on score go to fewer pieces, then to the lexicographically smallest
  // piece list. Scores within kTieTolerance are ties. An empty word yields an
  // empty list.
  std::vector<std::string> segment(std::string_view word) const;

  std::size_t max_word_len() const { return max_word_len_; }
  double total() const { return total_; }
  std::size_t vocabulary_size() const { return counts_.size(); }
  bool contains(std::string_view word) const { return counts_.contains(std::string(word)); }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  double total_ = 0.0;
  double log_total_ = 0.0;
  std::size_t max_word_len_ = kDefaultMaxWordLen;
};

}  // namespace curator
