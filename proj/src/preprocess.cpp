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

#include "curator/preprocess.hpp"

#include <algorithm>
#include <charconv>
#include <istream>

#include "curator/error.hpp"
#include "curator/parallel.hpp"
#include "curator/text.hpp"

namespace curator {

namespace {

constexpr std::array<std::string_view, kMethodCount> kMethodNames = {"url", "emoji", "hashtag",
                                                                      "casing", "punct"};

bool has_space(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    auto cp = text::decode_at(s, pos);
    if (cp.valid && text::is_space(cp.value)) return true;
    pos += cp.length;
  }
  return false;
}

bool has_uppercase(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    auto cp = text::decode_at(s, pos);
    if (cp.valid && text::has_lowercase_mapping(cp.value)) return true;
    pos += cp.length;
  }
  return false;
}

bool is_ascii_word(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_ascii_alnum(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return is_ascii_word(c) && c != '_';
  });
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

std::string_view method_name(Method m) { return kMethodNames[static_cast<std::size_t>(m)]; }

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<Method> parse_method_list(std::string_view list) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    auto name = list.substr(start, comma - start);
    if (!name.empty()) {
      auto m = parse_method(name);
      if (!m) throw ValidationError("unknown preprocessing step '" + std::string(name) + "'");
      if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    start = comma + 1;
  }
  return out;
}

std::size_t MethodSet::size() const {
  std::size_t n = 0;
  for (Method m : kAllMethods) n += contains(m);
  return n;
}

bool PreprocessConfig::enabled(Method m) const {
  return std::find(steps.begin(), steps.end(), m) != steps.end();
}

void PreprocessConfig::validate() const {
  if (max_consecutive_punct < 1) throw ValidationError("max_consecutive_punct must be >= 1");
  for (const auto* tok : {&has_cap, &all_cap, &url_token}) {
    if (tok->empty()) throw ValidationError("special tokens must be nonempty");
    if (has_space(*tok)) throw ValidationError("special token '" + *tok + "' contains whitespace");
  }
  if (has_uppercase(has_cap) || has_uppercase(all_cap)) {
    throw ValidationError("casing tokens must not contain uppercase letters");
  }
  if (url_token.find("http://") != std::string::npos || url_token.find("https://") != std::string::npos) {
    throw ValidationError("url token must not itself be a link");
  }
}

void PreprocessStats::add(const MethodSet& applied) {
  ++records;
  for (Method m : kAllMethods) {
    if (applied.contains(m)) ++modified[static_cast<std::size_t>(m)];
  }
}

// ---------------------------------------------------------------------------
// Emoji table

EmojiTable EmojiTable::load(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse(*in, path.string());
}

EmojiTable EmojiTable::parse(std::istream& in, std::string_view source) {
  EmojiTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    auto fields = split_tabs(line);
    if (fields.size() != 2) throw FormatError(where + ": expected hex-sequence \\t description");
    std::u32string seq;
    std::string_view hex = fields[0];
    while (!hex.empty()) {
      auto sp = hex.find(' ');
      auto part = hex.substr(0, sp);
      hex = sp == std::string_view::npos ? std::string_view{} : hex.substr(sp + 1);
      if (part.empty()) continue;
      std::uint32_t cp = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), cp, 16);
      if (ec != std::errc() || ptr != part.data() + part.size() || cp > 0x10FFFF ||
          (cp >= 0xD800 && cp <= 0xDFFF)) {
        throw FormatError(where + ": bad code point '" + std::string(part) + "'");
      }
      seq.push_back(static_cast<char32_t>(cp));
    }
    try {
      table.insert(std::move(seq), std::string(fields[1]));
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  return table;
}

void EmojiTable::insert(std::u32string sequence, std::string description) {
  if (sequence.empty()) throw ValidationError("empty emoji sequence");
  if (description.empty()) throw ValidationError("empty emoji description");
  if (description.find_first_of("\t\r\n") != std::string::npos) {
    throw ValidationError("emoji description contains a tab or newline");
  }
  first_.insert(sequence.front());
  max_len_ = std::max(max_len_, sequence.size());
  entries_.insert_or_assign(std::move(sequence), std::move(description));
}

const std::string* EmojiTable::find(std::u32string_view sequence) const {
  auto it = entries_.find(std::u32string(sequence));
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Transforms

std::string replace_urls(std::string_view s, std::string_view url_token) {
  std::string out;
  out.reserve(s.size());
  bool prev_word = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto rest = s.substr(pos);
    if (rest.starts_with("http://") || rest.starts_with("https://")) {
      std::size_t end = pos;
      while (end < s.size()) {
        auto cp = text::decode_at(s, end);
        if (cp.valid && text::is_space(cp.value)) break;
        end += cp.length;
      }
      out.append(url_token);
      pos = end;
      prev_word = true;
      continue;
    }
    if (!prev_word) {
      std::size_t len = rest.starts_with("URL") ? 3 : rest.starts_with("HTTP") ? 4 : 0;
      if (len != 0) {
        bool next_word = false;
        if (pos + len < s.size()) {
          auto next = text::decode_at(s, pos + len);
          next_word = next.valid && text::is_word_char(next.value);
        }
        if (!next_word) {
          out.append(url_token);
          pos += len;
          prev_word = true;
          continue;
        }
      }
    }
    auto cp = text::decode_at(s, pos);
    out.append(s.substr(pos, cp.length));
    prev_word = cp.valid && text::is_word_char(cp.value);
    pos += cp.length;
  }
  return out;
}

std::string substitute_emoji(std::string_view s, const EmojiTable& table) {
  struct Unit {
    char32_t cp;
    std::size_t offset;
    std::size_t length;
    bool valid;
  };
  std::vector<Unit> units;
  for (std::size_t pos = 0; pos < s.size();) {
    auto cp = text::decode_at(s, pos);
    units.push_back({cp.value, pos, cp.length, cp.valid});
    pos += cp.length;
  }
  auto is_space_unit = [&](std::size_t i) { return units[i].valid && text::is_space(units[i].cp); };

  std::string out;
  out.reserve(s.size());
  bool last_space = true;  // nothing emitted yet counts as a boundary
  std::u32string key;
  std::size_t i = 0;
  while (i < units.size()) {
    const std::string* desc = nullptr;
    std::size_t matched = 0;
    if (units[i].valid && table.may_start(units[i].cp)) {
      const std::size_t longest = std::min(table.max_sequence_length(), units.size() - i);
      for (std::size_t len = longest; len >= 1 && !desc; --len) {
        key.clear();
        bool ok = true;
        for (std::size_t k = i; k < i + len; ++k) {
          if (!units[k].valid) {
            ok = false;
            break;
          }
          key.push_back(units[k].cp);
        }
        if (ok && (desc = table.find(key))) matched = len;
      }
    }
    if (!desc) {
      out.append(s.substr(units[i].offset, units[i].length));
      last_space = is_space_unit(i);
      ++i;
      continue;
    }
    i += matched;
    if (i < units.size() && units[i].valid && units[i].cp == 0xFE0F) ++i;
    if (!last_space) out.push_back(' ');
    out.append(*desc);
    last_space = false;
    if (i < units.size() && !is_space_unit(i)) {
      out.push_back(' ');
      last_space = true;
    }
  }
  return out;
}

std::string segment_hashtags(std::string_view s, const SegmentationModel& model) {
  std::string out;
  out.reserve(s.size() + 8);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '#' && pos + 1 < s.size()) {
      std::size_t end = pos + 1;
      while (end < s.size()) {
        auto cp = text::decode_at(s, end);
        if (!cp.valid || !text::is_word_char(cp.value)) break;
        end += cp.length;
      }
      if (end > pos + 1) {
        const std::string_view tail = s.substr(pos + 1, end - pos - 1);
        std::vector<std::string> pieces;
        std::size_t start = 0;
        while (start <= tail.size()) {
          std::size_t us = tail.find('_', start);
          if (us == std::string_view::npos) us = tail.size();
          auto part = tail.substr(start, us - start);
          if (is_ascii_alnum(part)) {
            for (auto& piece : model.segment(ascii_lower(part))) pieces.push_back(std::move(piece));
          } else if (!part.empty()) {
            pieces.emplace_back(part);
          }
          start = us + 1;
        }
        if (pieces.empty()) {
          out.append(s.substr(pos, end - pos));
        } else {
          out.append("# ");
          for (std::size_t k = 0; k < pieces.size(); ++k) {
            if (k) out.push_back(' ');
            out.append(pieces[k]);
          }
        }
        pos = end;
        continue;
      }
    }
    out.push_back(s[pos]);
    ++pos;
  }
  return out;
}

std::string normalize_casing(std::string_view s, const CasingOptions& options) {
  std::string out;
  out.reserve(s.size() + 16);
  std::size_t copied = 0;
  for (const auto& tok : text::whitespace_tokens(s)) {
    const std::string_view word = s.substr(tok.begin, tok.end - tok.begin);
    if (std::find(options.keep.begin(), options.keep.end(), word) != options.keep.end()) continue;
    bool upper = false;
    std::size_t letters = 0;
    std::size_t upper_letters = 0;
    for (std::size_t pos = 0; pos < word.size();) {
      auto cp = text::decode_at(word, pos);
      pos += cp.length;
      if (!cp.valid) continue;
      const bool u = text::has_lowercase_mapping(cp.value);
      upper = upper || u;
      if (text::is_alpha(cp.value)) {
        ++letters;
        upper_letters += u;
      }
    }
    if (!upper) continue;
    out.append(s.substr(copied, tok.begin - copied));
    const bool all_cap = letters >= 2 && upper_letters == letters;
    out.append(all_cap ? options.all_cap : options.has_cap);
    out.push_back(' ');
    out.append(text::to_lower(word));
    copied = tok.end;
  }
  out.append(s.substr(copied));
  return out;
}

std::string trim_punctuation(std::string_view s, std::size_t max) {
  if (max < 1) throw ValidationError("max consecutive punctuation must be >= 1");
  std::string out;
  out.reserve(s.size());
  char32_t run_cp = 0;
  std::size_t run = 0;
  for (std::size_t pos = 0; pos < s.size();) {
    auto cp = text::decode_at(s, pos);
    if (cp.valid && text::is_punct(cp.value)) {
      if (run > 0 && cp.value == run_cp) {
        ++run;
      } else {
        run_cp = cp.value;
        run = 1;
      }
    } else {
      run = 0;
    }
    if (run <= max) out.append(s.substr(pos, cp.length));
    pos += cp.length;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline

Preprocessor::Preprocessor(PreprocessConfig config, const EmojiTable* emoji,
                           const SegmentationModel* model)
    : config_(std::move(config)), emoji_(emoji), model_(model) {
  config_.validate();
  if (config_.enabled(Method::kEmoji) && !emoji_) {
    throw ValidationError("emoji step enabled without an emoji table");
  }
  if (config_.enabled(Method::kHashtag) && !model_) {
    throw ValidationError("hashtag step enabled without a segmentation model");
  }
  casing_.has_cap = config_.has_cap;
  casing_.all_cap = config_.all_cap;
  casing_.keep = config_.keep_case;
  casing_.keep.push_back(config_.url_token);
}

std::string Preprocessor::apply(Method m, std::string_view s) const {
  switch (m) {
    case Method::kUrl:
      return replace_urls(s, config_.url_token);
    case Method::kEmoji:
      return substitute_emoji(s, *emoji_);
    case Method::kHashtag:
      return segment_hashtags(s, *model_);
    case Method::kCasing:
      return normalize_casing(s, casing_);
    case Method::kPunct:
      return trim_punctuation(s, config_.max_consecutive_punct);
  }
  return std::string(s);
}

ProcessedRecord Preprocessor::process(const Record& r) const {
  ProcessedRecord result{r, {}};
  for (Method m : kAllMethods) {
    if (!config_.enabled(m)) continue;
    std::string next = apply(m, result.record.text);
    if (next != result.record.text) {
      result.applied.insert(m);
      result.record.text = std::move(next);
    }
  }
  return result;
}

PipelineResult Preprocessor::run(const Dataset& ds, std::size_t threads) const {
  std::vector<ProcessedRecord> processed(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t i) { processed[i] = process(ds.records[i]); });
  PipelineResult result;
  result.dataset.provenance = ds.provenance;
  result.dataset.records.reserve(ds.size());
  for (auto& p : processed) {
    result.stats.add(p.applied);
    result.dataset.records.push_back(std::move(p.record));
  }
  return result;
}

ProcessedRecord preprocess_record(const Record& r, const Preprocessor& pre) { return pre.process(r); }

PipelineResult run_pipeline(const Dataset& ds, const Preprocessor& pre, std::size_t threads) {
  return pre.run(ds, threads);
}

}  // namespace curator
