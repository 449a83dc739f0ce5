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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curator/corpus_io.hpp"
#include "curator/embeddings.hpp"

namespace curator {

// Translation embedding distance of one instance: the L2 distance between the
// embedding of a sentence and that of its machine translation into the target
// language. Lower means more transferable.
//
// Distances are accumulated in double and stored at float precision, which
// is exactly what the 9-significant-digit scores file preserves.
struct TedScore {
  std::string id;
  float distance = 0.0f;

  bool operator==(const TedScore&) const = default;
};

// Mean instance distance of one transfer language.
struct LanguageTed {
  std::string language;
  double mean_distance = 0.0;
  std::size_t n = 0;

  bool operator==(const LanguageTed&) const = default;
};

enum class SelectionMode { kTop, kBottom, kRandom };

std::string_view selection_mode_name(SelectionMode mode);
std::optional<SelectionMode> parse_selection_mode(std::string_view name);

// Component-wise mean of the token rows. Throws ValidationError for an empty
// matrix.
SentenceEmbedding mean_pool(const TokenEmbeddings& tokens);
// Pools every record of a token-kind file into a sentence-kind file.
EmbeddingFile mean_pool(const EmbeddingFile& tokens, std::size_t threads = 1);

// Throws ValidationError on id or dimension mismatch.
TedScore ted_instance(const SentenceEmbedding& src, const SentenceEmbedding& tgt);

// Scores every source record against the target record with the same id.
// Output follows source order. Both files must be sentence-kind.
std::vector<TedScore> ted_scores(const EmbeddingFile& src, const EmbeddingFile& tgt,
                                 std::size_t threads = 1);

LanguageTed ted_language(std::string language, std::span<const TedScore> scores);

// Ascending by mean distance, ties by language code.
std::vector<LanguageTed> rank_languages(std::span<const LanguageTed> languages);

// top: k smallest distances; bottom: k largest; both returned in ascending
// (distance, id) order. random: k records drawn uniformly without
// replacement, in draw order.
Dataset select_instances(const Dataset& records, std::span<const TedScore> scores, std::size_t k,
                         SelectionMode mode, std::uint64_t seed);

// Prefixes every id with "<language>:" and stamps the language.
Dataset namespace_ids(const Dataset& ds, std::string_view language);

// Target records followed by the selected transfer records. Throws
// ValidationError on an id collision.
Dataset build_transfer_set(const Dataset& target, const Dataset& transfer_selected);

// Scores TSV: id \t distance (9 significant digits), "id" header.
std::vector<TedScore> read_scores_tsv(const std::filesystem::path& path);
std::vector<TedScore> parse_scores_tsv(std::istream& in, std::string_view source);
void write_scores_tsv(std::span<const TedScore> scores, const std::filesystem::path& path);
void write_scores_tsv(std::span<const TedScore> scores, std::ostream& out);

std::string format_distance(float d);

}  // namespace curator
