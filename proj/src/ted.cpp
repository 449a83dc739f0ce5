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

#include "curator/ted.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "curator/error.hpp"
#include "curator/parallel.hpp"
#include "curator/random.hpp"

namespace curator {

std::string_view selection_mode_name(SelectionMode mode) {
  switch (mode) {
    case SelectionMode::kTop:
      return "top";
    case SelectionMode::kBottom:
      return "bottom";
    case SelectionMode::kRandom:
      return "random";
  }
  return "top";
}

std::optional<SelectionMode> parse_selection_mode(std::string_view name) {
  if (name == "top") return SelectionMode::kTop;
  if (name == "bottom") return SelectionMode::kBottom;
  if (name == "random") return SelectionMode::kRandom;
  return std::nullopt;
}

SentenceEmbedding mean_pool(const TokenEmbeddings& tokens) {
  const std::size_t n = tokens.n_tokens();
  if (n == 0) throw ValidationError("cannot mean-pool '" + tokens.id + "': no tokens");
  std::vector<double> sum(tokens.dim, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = tokens.row(r);
    for (std::size_t c = 0; c < tokens.dim; ++c) sum[c] += row[c];
  }
  SentenceEmbedding out{tokens.id, std::vector<float>(tokens.dim)};
  for (std::size_t c = 0; c < tokens.dim; ++c) {
    out.values[c] = static_cast<float>(sum[c] / static_cast<double>(n));
  }
  return out;
}

EmbeddingFile mean_pool(const EmbeddingFile& tokens, std::size_t threads) {
  if (tokens.kind != EmbeddingKind::kToken) throw ValidationError("mean_pool expects a token-kind file");
  EmbeddingFile out;
  out.kind = EmbeddingKind::kSentence;
  out.dim = tokens.dim;
  out.sentences.resize(tokens.tokens.size());
  parallel_for(tokens.tokens.size(), threads,
               [&](std::size_t i) { out.sentences[i] = mean_pool(tokens.tokens[i]); });
  return out;
}

TedScore ted_instance(const SentenceEmbedding& src, const SentenceEmbedding& tgt) {
  if (src.id != tgt.id) {
    throw ValidationError("TED id mismatch: '" + src.id + "' vs '" + tgt.id + "'");
  }
  if (src.dim() != tgt.dim() || src.dim() == 0) {
    throw ValidationError("TED dimension mismatch for '" + src.id + "': " +
                          std::to_string(src.dim()) + " vs " + std::to_string(tgt.dim()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < src.dim(); ++i) {
    const double d = static_cast<double>(src.values[i]) - static_cast<double>(tgt.values[i]);
    sum += d * d;
  }
  return {src.id, static_cast<float>(std::sqrt(sum))};
}

std::vector<TedScore> ted_scores(const EmbeddingFile& src, const EmbeddingFile& tgt,
                                 std::size_t threads) {
  if (src.kind != EmbeddingKind::kSentence || tgt.kind != EmbeddingKind::kSentence) {
    throw ValidationError("TED scoring expects sentence-kind embeddings");
  }
  if (src.dim != tgt.dim) {
    throw ValidationError("TED dimension mismatch: " + std::to_string(src.dim) + " vs " +
                          std::to_string(tgt.dim));
  }
  std::unordered_map<std::string_view, std::size_t> by_id;
  by_id.reserve(tgt.sentences.size());
  for (std::size_t i = 0; i < tgt.sentences.size(); ++i) by_id.emplace(tgt.sentences[i].id, i);
  std::vector<std::size_t> match(src.sentences.size());
  for (std::size_t i = 0; i < src.sentences.size(); ++i) {
    auto it = by_id.find(src.sentences[i].id);
    if (it == by_id.end()) {
      throw ValidationError("no target embedding for id '" + src.sentences[i].id + "'");
    }
    match[i] = it->second;
  }
  std::vector<TedScore> out(src.sentences.size());
  parallel_for(out.size(), threads, [&](std::size_t i) {
    out[i] = ted_instance(src.sentences[i], tgt.sentences[match[i]]);
  });
  return out;
}

LanguageTed ted_language(std::string language, std::span<const TedScore> scores) {
  if (scores.empty()) throw ValidationError("no TED scores for language '" + language + "'");
  double sum = 0.0;
  for (const auto& s : scores) sum += s.distance;
  return {std::move(language), sum / static_cast<double>(scores.size()), scores.size()};
}

std::vector<LanguageTed> rank_languages(std::span<const LanguageTed> languages) {
  std::vector<LanguageTed> out(languages.begin(), languages.end());
  std::sort(out.begin(), out.end(), [](const LanguageTed& a, const LanguageTed& b) {
    if (a.mean_distance != b.mean_distance) return a.mean_distance < b.mean_distance;
    return a.language < b.language;
  });
  return out;
}

Dataset select_instances(const Dataset& records, std::span<const TedScore> scores, std::size_t k,
                         SelectionMode mode, std::uint64_t seed) {
  const std::size_t n = records.size();
  if (k > n) {
    throw ValidationError("cannot select k=" + std::to_string(k) + " from " + std::to_string(n) +
                          " records");
  }
  std::unordered_map<std::string_view, float> distance_of;
  distance_of.reserve(scores.size());
  for (const auto& s : scores) {
    if (!distance_of.emplace(s.id, s.distance).second) {
      throw ValidationError("duplicate TED score for id '" + s.id + "'");
    }
  }
  std::vector<float> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = distance_of.find(records.records[i].id);
    if (it == distance_of.end()) {
      throw ValidationError("missing TED score for record '" + records.records[i].id + "'");
    }
    dist[i] = it->second;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> picked;
  if (mode == SelectionMode::kRandom) {
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(order[i], order[i + rng.below(n - i)]);
    }
    picked.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (dist[a] != dist[b]) return dist[a] < dist[b];
      return records.records[a].id < records.records[b].id;
    });
    if (mode == SelectionMode::kTop) {
      picked.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      picked.assign(order.end() - static_cast<std::ptrdiff_t>(k), order.end());
    }
  }

  Dataset out;
  out.provenance = records.provenance;
  out.provenance.push_back("ted-select " + std::string(selection_mode_name(mode)) + " k=" +
                           std::to_string(k));
  out.records.reserve(k);
  for (std::size_t idx : picked) out.records.push_back(records.records[idx]);
  return out;
}

Dataset namespace_ids(const Dataset& ds, std::string_view language) {
  Dataset out = ds;
  for (auto& r : out.records) {
    r.id = std::string(language) + ":" + r.id;
    r.language = std::string(language);
  }
  return out;
}

Dataset build_transfer_set(const Dataset& target, const Dataset& transfer_selected) {
  std::unordered_set<std::string_view> ids;
  ids.reserve(target.size() + transfer_selected.size());
  for (const auto& r : target.records) ids.insert(r.id);
  for (const auto& r : transfer_selected.records) {
    if (!ids.insert(r.id).second) {
      throw ValidationError("transfer id '" + r.id + "' collides with an existing id");
    }
  }
  Dataset out;
  out.records.reserve(target.size() + transfer_selected.size());
  out.records = target.records;
  out.records.insert(out.records.end(), transfer_selected.records.begin(),
                     transfer_selected.records.end());
  out.provenance = target.provenance;
  out.provenance.insert(out.provenance.end(), transfer_selected.provenance.begin(),
                        transfer_selected.provenance.end());
  return out;
}

// ---------------------------------------------------------------------------
// Scores TSV

std::string format_distance(float d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(d));
  return buf;
}

std::vector<TedScore> read_scores_tsv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_scores_tsv(*in, path.string());
}

std::vector<TedScore> parse_scores_tsv(std::istream& in, std::string_view source) {
  std::vector<TedScore> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (line_no == 1 && fields[0] == "id") continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (fields.size() != 2) {
      throw FormatError(where + ": expected 2 tab-separated fields, found " +
                        std::to_string(fields.size()));
    }
    float d = 0.0f;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), d);
    if (fields[1].empty() || ec != std::errc() || ptr != fields[1].data() + fields[1].size() ||
        !std::isfinite(d)) {
      throw FormatError(where + ": non-numeric distance '" + std::string(fields[1]) + "'");
    }
    if (d < 0.0f) throw ValidationError(where + ": negative distance");
    if (!seen.emplace(fields[0]).second) {
      throw ValidationError(where + ": duplicate id '" + std::string(fields[0]) + "'");
    }
    out.push_back({std::string(fields[0]), d});
  }
  return out;
}

void write_scores_tsv(std::span<const TedScore> scores, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_scores_tsv(scores, *out);
  out->flush();
  if (!*out) throw IoError("write failed: " + path.string());
}

void write_scores_tsv(std::span<const TedScore> scores, std::ostream& out) {
  out << "id\tdistance\n";
  for (const auto& s : scores) out << sanitize_field(s.id) << '\t' << format_distance(s.distance) << '\n';
}

}  // namespace curator
