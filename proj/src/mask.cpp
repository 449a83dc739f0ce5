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

#include "curator/mask.hpp"

#include <cmath>
#include <istream>

#include "curator/error.hpp"
#include "curator/parallel.hpp"
#include "curator/random.hpp"
#include "curator/text.hpp"

namespace curator {

WordList WordList::load(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse(*in, path.string());
}

WordList WordList::parse(std::istream& in, std::string_view source) {
  WordList list;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = text::whitespace_tokens(line);
    if (toks.empty()) continue;
    if (toks.size() > 1) {
      throw ValidationError(std::string(source) + ":" + std::to_string(line_no) +
                            ": word-list entry contains whitespace");
    }
    list.insert(std::string_view(line).substr(toks[0].begin, toks[0].end - toks[0].begin));
  }
  return list;
}

void WordList::insert(std::string_view term) {
  if (term.empty()) throw ValidationError("empty word-list entry");
  auto toks = text::whitespace_tokens(term);
  if (toks.size() != 1 || toks[0].begin != 0 || toks[0].end != term.size()) {
    throw ValidationError("word-list entry '" + std::string(term) + "' contains whitespace");
  }
  terms_.insert(text::to_lower(term));
}

std::string mask_key(std::string_view token) { return text::to_lower(text::trim_punct(token)); }

std::string mask_offensive(std::string_view s, const WordList& list, const MaskOptions& options) {
  if (!(options.p >= 0.0 && options.p <= 1.0)) {
    throw ValidationError("mask probability must be in [0, 1]");
  }
  Rng rng(options.seed);
  std::string out;
  out.reserve(s.size());
  std::size_t copied = 0;
  for (const auto& tok : text::whitespace_tokens(s)) {
    const auto word = s.substr(tok.begin, tok.end - tok.begin);
    if (!list.contains(mask_key(word))) continue;
    if (!(rng.unit() < options.p)) continue;
    out.append(s.substr(copied, tok.begin - copied));
    out.append(options.pad_token);
    copied = tok.end;
  }
  out.append(s.substr(copied));
  return out;
}

Dataset mask_dataset(const Dataset& ds, const WordList& list, const MaskOptions& options,
                     std::size_t threads) {
  Dataset out = ds;
  parallel_for(ds.size(), threads, [&](std::size_t i) {
    MaskOptions per_record = options;
    per_record.seed = record_seed(options.seed, ds.records[i].id);
    out.records[i].text = mask_offensive(ds.records[i].text, list, per_record);
  });
  return out;
}

}  // namespace curator
