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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "curator/corpus_io.hpp"
#include "curator/segment.hpp"

namespace curator {

// Normalization steps, in the fixed order the pipeline applies them.
enum class Method : std::uint8_t { kUrl = 0, kEmoji, kHashtag, kCasing, kPunct };

inline constexpr std::size_t kMethodCount = 5;
inline constexpr std::array<Method, kMethodCount> kAllMethods = {
    Method::kUrl, Method::kEmoji, Method::kHashtag, Method::kCasing, Method::kPunct};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
// Comma-separated list ("url,emoji"); throws ValidationError on unknown names.
std::vector<Method> parse_method_list(std::string_view list);

class MethodSet {
 public:
  void insert(Method m) { bits_ |= bit(m); }
  bool contains(Method m) const { return (bits_ & bit(m)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool operator==(const MethodSet&) const = default;

 private:
  static std::uint8_t bit(Method m) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m)); }
  std::uint8_t bits_ = 0;
};

struct PreprocessConfig {
  // Enabled steps. Always applied in kAllMethods order regardless of the
  // order listed here.
  std::vector<Method> steps{kAllMethods.begin(), kAllMethods.end()};
  std::size_t max_consecutive_punct = 3;
  std::string has_cap = "<has_cap>";
  std::string all_cap = "<all_cap>";
  std::string url_token = "HTTP";
  // Whitespace tokens casing normalization leaves alone. The url token is
  // always protected in addition to these.
  std::vector<std::string> keep_case = {"@USER"};

  bool enabled(Method m) const;
  // Throws ValidationError.
  void validate() const;
};

// Number of records each method modified; a record counts once per method.
struct PreprocessStats {
  std::array<std::size_t, kMethodCount> modified{};
  std::size_t records = 0;

  std::size_t operator[](Method m) const { return modified[static_cast<std::size_t>(m)]; }
  void add(const MethodSet& applied);
  bool operator==(const PreprocessStats&) const = default;
};

// Emoji code-point sequence -> plain-text description.
class EmojiTable {
 public:
  // TSV: hex code points separated by spaces \t description.
  static EmojiTable load(const std::filesystem::path& path);
  static EmojiTable parse(std::istream& in, std::string_view source);

  // Throws ValidationError on empty sequences or descriptions with tabs or
  // newlines.
  void insert(std::u32string sequence, std::string description);
  const std::string* find(std::u32string_view sequence) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t max_sequence_length() const { return max_len_; }
  bool may_start(char32_t cp) const { return first_.contains(cp); }

 private:
  std::unordered_map<std::u32string, std::string> entries_;
  std::unordered_set<char32_t> first_;
  std::size_t max_len_ = 0;
};

// "URL" and "HTTP" word tokens and raw http:// / https:// links become
// `url_token`.
std::string replace_urls(std::string_view text, std::string_view url_token = "HTTP");

// Longest-match emoji replacement. A description is separated from
// neighbouring non-space text by exactly one space and never padded at the
// string boundaries. A U+FE0F directly after a replaced emoji is dropped.
std::string substitute_emoji(std::string_view text, const EmojiTable& table);

// "#Tail" -> "# " + segmented tail. The tail is split on '_'; all-ASCII
// alphanumeric parts are lowercased and segmented, other parts are kept
// verbatim.
std::string segment_hashtags(std::string_view text, const SegmentationModel& model);

struct CasingOptions {
  std::string has_cap = "<has_cap>";
  std::string all_cap = "<all_cap>";
  std::vector<std::string> keep;
};

// Lowercases each whitespace token that contains an uppercase letter and
// prefixes it with all_cap (every letter uppercase, at least two letters) or
// has_cap. Whitespace between tokens is preserved.
std::string normalize_casing(std::string_view text, const CasingOptions& options = {});

// Truncates runs of more than `max` identical punctuation code points.
std::string trim_punctuation(std::string_view text, std::size_t max = 3);

struct ProcessedRecord {
  Record record;
  MethodSet applied;
};

struct PipelineResult {
  Dataset dataset;
  PreprocessStats stats;
};

// Binds a config to the resources its steps need. The emoji table and the
// segmentation model must outlive the preprocessor; they are required only
// when the matching step is enabled.
class Preprocessor {
 public:
  Preprocessor(PreprocessConfig config, const EmojiTable* emoji, const SegmentationModel* model);

  std::string apply(Method m, std::string_view text) const;
  ProcessedRecord process(const Record& r) const;
  PipelineResult run(const Dataset& ds, std::size_t threads = 1) const;

  const PreprocessConfig& config() const { return config_; }

 private:
  PreprocessConfig config_;
  CasingOptions casing_;
  const EmojiTable* emoji_;
  const SegmentationModel* model_;
};

ProcessedRecord preprocess_record(const Record& r, const Preprocessor& pre);
PipelineResult run_pipeline(const Dataset& ds, const Preprocessor& pre, std::size_t threads = 1);

}  // namespace curator
