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
#include <span>
#include <string>
#include <vector>

namespace curator {

// CEMB binary layout (all integers little-endian):
//
//   "CEMB" | u8 kind (0 sentence, 1 token) | u32 dim | u64 count
//   per record: u16 id_len | id bytes | [kind 1: u32 n_tokens] | f32 values
//
// A sentence record carries `dim` floats, a token record n_tokens * dim.
enum class EmbeddingKind : std::uint8_t { kSentence = 0, kToken = 1 };

struct SentenceEmbedding {
  std::string id;
  std::vector<float> values;

  std::size_t dim() const { return values.size(); }
  bool operator==(const SentenceEmbedding&) const = default;
};

// Row-major token matrix.
struct TokenEmbeddings {
  std::string id;
  std::size_t dim = 0;
  std::vector<float> values;

  std::size_t n_tokens() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const float> row(std::size_t i) const {
    return std::span<const float>(values).subspan(i * dim, dim);
  }
  bool operator==(const TokenEmbeddings&) const = default;
};

// Exactly one of `sentences` / `tokens` is populated, according to `kind`.
struct EmbeddingFile {
  EmbeddingKind kind = EmbeddingKind::kSentence;
  std::uint32_t dim = 0;
  std::vector<SentenceEmbedding> sentences;
  std::vector<TokenEmbeddings> tokens;

  std::size_t size() const {
    return kind == EmbeddingKind::kSentence ? sentences.size() : tokens.size();
  }
  bool operator==(const EmbeddingFile&) const = default;
};

struct EmbeddingSummary {
  EmbeddingKind kind = EmbeddingKind::kSentence;
  std::uint32_t dim = 0;
  std::uint64_t count = 0;
  std::uint64_t total_rows = 0;
};

EmbeddingFile read_embeddings(const std::filesystem::path& path);
EmbeddingFile read_embeddings(std::istream& in, const std::string& source);

void write_embeddings(const EmbeddingFile& file, const std::filesystem::path& path);
void write_embeddings(const EmbeddingFile& file, std::ostream& out);

// Walks a CEMB file without keeping the vectors. Throws FormatError on any
// layout violation, duplicate id or non-finite value.
EmbeddingSummary validate_embeddings(const std::filesystem::path& path);

}  // namespace curator
