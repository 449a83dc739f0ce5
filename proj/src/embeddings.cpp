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

#include "curator/embeddings.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "curator/corpus_io.hpp"
#include "curator/error.hpp"

namespace curator {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'E', 'M', 'B'};

class LeWriter {
 public:
  explicit LeWriter(std::ostream& out) : out_(out) {}

  template <typename T>
  void put(T v) {
    std::array<char, sizeof(T)> buf;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF);
    }
    out_.write(buf.data(), buf.size());
  }

  void put_floats(std::span<const float> values) {
    for (float f : values) put(std::bit_cast<std::uint32_t>(f));
  }

  void put_bytes(std::string_view s) { out_.write(s.data(), static_cast<std::streamsize>(s.size())); }

 private:
  std::ostream& out_;
};

class CembReader {
 public:
  CembReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {
    std::array<char, 4> magic{};
    read_exact(magic.data(), magic.size(), "magic");
    if (magic != kMagic) fail("bad magic bytes (expected \"CEMB\")");
    auto kind = get<std::uint8_t>("kind");
    if (kind > 1) fail("unknown kind " + std::to_string(kind));
    kind_ = static_cast<EmbeddingKind>(kind);
    dim_ = get<std::uint32_t>("dim");
    if (dim_ == 0) fail("dim must be positive");
    count_ = get<std::uint64_t>("count");
  }

  EmbeddingKind kind() const { return kind_; }
  std::uint32_t dim() const { return dim_; }
  std::uint64_t count() const { return count_; }

  // Reads the next record into `id` / `values`; returns the row count.
  std::uint32_t next(std::string& id, std::vector<float>& values) {
    ++index_;
    auto id_len = get<std::uint16_t>("id length");
    if (id_len == 0) fail("empty id");
    id.resize(id_len);
    read_exact(id.data(), id_len, "id");
    if (!ids_.insert(id).second) fail("duplicate id '" + id + "'");
    std::uint32_t rows = 1;
    if (kind_ == EmbeddingKind::kToken) {
      rows = get<std::uint32_t>("token count");
      if (rows == 0) fail("record '" + id + "' has zero tokens");
    }
    const std::uint64_t n = static_cast<std::uint64_t>(rows) * dim_;
    // Grow as bytes arrive so a corrupt token count cannot force a huge
    // allocation before truncation is detected.
    values.clear();
    values.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 20)));
    for (std::uint64_t i = 0; i < n; ++i) {
      float f = std::bit_cast<float>(get<std::uint32_t>("vector"));
      if (!std::isfinite(f)) fail("record '" + id + "' has a non-finite component");
      values.push_back(f);
    }
    return rows;
  }

  void expect_end() {
    if (in_.peek() != std::char_traits<char>::eof()) {
      fail("trailing bytes after " + std::to_string(count_) + " records");
    }
  }

 private:
  template <typename T>
  T get(const char* what) {
    std::array<unsigned char, sizeof(T)> buf{};
    read_exact(reinterpret_cast<char*>(buf.data()), buf.size(), what);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return static_cast<T>(v);
  }

  void read_exact(char* dst, std::size_t n, const char* what) {
    in_.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      fail(std::string("truncated while reading ") + what +
           (index_ ? " of record " + std::to_string(index_) : std::string()));
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError(source_ + ": CEMB format error: " + msg);
  }

  std::istream& in_;
  std::string source_;
  EmbeddingKind kind_ = EmbeddingKind::kSentence;
  std::uint32_t dim_ = 0;
  std::uint64_t count_ = 0;
  std::uint64_t index_ = 0;
  std::unordered_set<std::string> ids_;
};

void check_id(const std::string& id) {
  if (id.empty()) throw FormatError("CEMB record id is empty");
  if (id.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw FormatError("CEMB record id longer than 65535 bytes");
  }
}

void check_finite(const std::string& id, std::span<const float> values) {
  for (float f : values) {
    if (!std::isfinite(f)) throw FormatError("embedding '" + id + "' has a non-finite component");
  }
}

}  // namespace

EmbeddingFile read_embeddings(const std::filesystem::path& path) {
  auto in = open_input(path, /*binary=*/true);
  return read_embeddings(*in, path.string());
}

EmbeddingFile read_embeddings(std::istream& in, const std::string& source) {
  CembReader reader(in, source);
  EmbeddingFile file;
  file.kind = reader.kind();
  file.dim = reader.dim();
  std::string id;
  std::vector<float> values;
  for (std::uint64_t i = 0; i < reader.count(); ++i) {
    reader.next(id, values);
    if (file.kind == EmbeddingKind::kSentence) {
      file.sentences.push_back({id, values});
    } else {
      file.tokens.push_back({id, file.dim, values});
    }
  }
  reader.expect_end();
  return file;
}

void write_embeddings(const EmbeddingFile& file, const std::filesystem::path& path) {
  auto out = open_output(path, /*binary=*/true);
  write_embeddings(file, *out);
  out->flush();
  if (!*out) throw IoError("write failed: " + path.string());
}

void write_embeddings(const EmbeddingFile& file, std::ostream& out) {
  if (file.dim == 0) throw FormatError("CEMB dim must be positive");
  const bool sentence = file.kind == EmbeddingKind::kSentence;
  if ((sentence && !file.tokens.empty()) || (!sentence && !file.sentences.empty())) {
    throw FormatError("CEMB file carries records of the wrong kind");
  }
  LeWriter w(out);
  w.put_bytes(std::string_view(kMagic.data(), kMagic.size()));
  w.put(static_cast<std::uint8_t>(file.kind));
  w.put(file.dim);
  w.put(static_cast<std::uint64_t>(file.size()));
  if (sentence) {
    for (const auto& s : file.sentences) {
      check_id(s.id);
      if (s.values.size() != file.dim) {
        throw FormatError("embedding '" + s.id + "' has " + std::to_string(s.values.size()) +
                          " components, header dim is " + std::to_string(file.dim));
      }
      check_finite(s.id, s.values);
      w.put(static_cast<std::uint16_t>(s.id.size()));
      w.put_bytes(s.id);
      w.put_floats(s.values);
    }
  } else {
    for (const auto& t : file.tokens) {
      check_id(t.id);
      if (t.dim != file.dim || t.values.empty() || t.values.size() % file.dim != 0) {
        throw FormatError("token embedding '" + t.id + "' does not match header dim " +
                          std::to_string(file.dim));
      }
      if (t.n_tokens() > std::numeric_limits<std::uint32_t>::max()) {
        throw FormatError("token embedding '" + t.id + "' has too many tokens");
      }
      check_finite(t.id, t.values);
      w.put(static_cast<std::uint16_t>(t.id.size()));
      w.put_bytes(t.id);
      w.put(static_cast<std::uint32_t>(t.n_tokens()));
      w.put_floats(t.values);
    }
  }
}

EmbeddingSummary validate_embeddings(const std::filesystem::path& path) {
  auto in = open_input(path, /*binary=*/true);
  CembReader reader(*in, path.string());
  EmbeddingSummary summary{reader.kind(), reader.dim(), reader.count(), 0};
  std::string id;
  std::vector<float> values;
  for (std::uint64_t i = 0; i < reader.count(); ++i) summary.total_rows += reader.next(id, values);
  reader.expect_end();
  return summary;
}

}  // namespace curator
