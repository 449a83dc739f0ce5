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

#include "curator/segment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>

#include "curator/corpus_io.hpp"
#include "curator/error.hpp"

namespace curator {

SegmentationModel::SegmentationModel(std::unordered_map<std::string, std::uint64_t> counts,
                                     std::size_t max_word_len)
    : counts_(std::move(counts)), max_word_len_(max_word_len) {
  if (max_word_len_ == 0) throw ValidationError("max_word_len must be at least 1");
  for (const auto& [word, count] : counts_) {
    if (word.empty()) throw ValidationError("segmentation model contains an empty word");
    if (count == 0) throw ValidationError("segmentation model count for '" + word + "' is zero");
    total_ += static_cast<double>(count);
  }
  log_total_ = total_ > 0 ? std::log(total_) : 0.0;
}

SegmentationModel SegmentationModel::load(const std::filesystem::path& path, std::size_t max_word_len) {
  auto in = open_input(path);
  return parse(*in, path.string(), max_word_len);
}

SegmentationModel SegmentationModel::parse(std::istream& in, std::string_view source,
                                           std::size_t max_word_len) {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (fields.size() != 2) throw FormatError(where + ": expected word \\t count");
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), count);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size() || count == 0) {
      throw FormatError(where + ": count must be a positive integer, got '" +
                        std::string(fields[1]) + "'");
    }
    if (!counts.emplace(std::string(fields[0]), count).second) {
      throw ValidationError(where + ": duplicate word '" + std::string(fields[0]) + "'");
    }
  }
  return SegmentationModel(std::move(counts), max_word_len);
}

double SegmentationModel::score(std::string_view word) const {
  auto it = counts_.find(std::string(word));
  if (it != counts_.end()) return std::log(static_cast<double>(it->second) / total_);
  // log(10 / (total * 10^n)) without forming 10^n.
  const double n = static_cast<double>(word.size());
  return (1.0 - n) * std::numbers::ln10 - log_total_;
}

bool SegmentationModel::scores_tie(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<std::string> SegmentationModel::segment(std::string_view word) const {
  const std::size_t n = word.size();
  if (n == 0) return {};

  // best[j]: score of the best split of word[0, j); prev[j]: start of its last piece.
  std::vector<double> best(n + 1, -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> pieces(n + 1, 0);
  std::vector<std::size_t> prev(n + 1, 0);
  best[0] = 0.0;

  auto unwind = [&](std::size_t start, std::size_t end) {
    std::vector<std::string> out;
    out.emplace_back(word.substr(start, end - start));
    for (std::size_t j = start; j > 0; j = prev[j]) out.emplace_back(word.substr(prev[j], j - prev[j]));
    std::reverse(out.begin(), out.end());
    return out;
  };

  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t lo = j > max_word_len_ ? j - max_word_len_ : 0;
    for (std::size_t i = lo; i < j; ++i) {
      const double cand = best[i] + score(word.substr(i, j - i));
      const std::size_t cand_pieces = pieces[i] + 1;
      bool take = false;
      if (!scores_tie(cand, best[j])) {
        take = cand > best[j];
      } else {
        if (cand_pieces < pieces[j]) {
          take = true;
        } else if (cand_pieces == pieces[j]) {
          take = unwind(i, j) < unwind(prev[j], j);
        }
      }
      if (take) {
        best[j] = cand;
        pieces[j] = cand_pieces;
        prev[j] = i;
      }
    }
  }

  std::vector<std::string> out;
  for (std::size_t j = n; j > 0; j = prev[j]) out.emplace_back(word.substr(prev[j], j - prev[j]));
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace curator
