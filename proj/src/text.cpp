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

#include "curator/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace curator::text {

CodePoint decode_at(std::string_view s, std::size_t pos) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(s.data());
  const auto n = static_cast<std::int32_t>(s.size());
  auto i = static_cast<std::int32_t>(pos);
  UChar32 c = 0;
  U8_NEXT(bytes, i, n, c);
  const auto len = static_cast<std::size_t>(i) - pos;
  if (c < 0) return {0xFFFD, 1, false};
  return {static_cast<char32_t>(c), len, true};
}

void append_utf8(std::string& out, char32_t cp) {
  std::uint8_t buf[U8_MAX_LENGTH];
  std::int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) return;
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

std::vector<char32_t> to_code_points(std::string_view s) {
  std::vector<char32_t> out;
  for (std::size_t pos = 0; pos < s.size();) {
    auto cp = decode_at(s, pos);
    out.push_back(cp.value);
    pos += cp.length;
  }
  return out;
}

std::size_t count_code_points(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < s.size(); ++n) pos += decode_at(s, pos).length;
  return n;
}

bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

bool is_punct(char32_t cp) { return u_ispunct(static_cast<UChar32>(cp)); }

bool is_alpha(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)); }

bool is_word_char(char32_t cp) {
  if (cp == U'_') return true;
  auto c = static_cast<UChar32>(cp);
  if (u_isalnum(c)) return true;
  auto mask = U_GET_GC_MASK(c);
  return (mask & U_GC_M_MASK) != 0;
}

bool has_lowercase_mapping(char32_t cp) {
  return u_tolower(static_cast<UChar32>(cp)) != static_cast<UChar32>(cp);
}

char32_t to_lower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    auto cp = decode_at(s, pos);
    if (cp.valid) {
      append_utf8(out, to_lower(cp.value));
    } else {
      out.append(s.substr(pos, cp.length));
    }
    pos += cp.length;
  }
  return out;
}

std::vector<TokenSpan> whitespace_tokens(std::string_view s) {
  std::vector<TokenSpan> tokens;
  std::size_t pos = 0;
  bool in_token = false;
  std::size_t start = 0;
  while (pos < s.size()) {
    auto cp = decode_at(s, pos);
    bool space = cp.valid && is_space(cp.value);
    if (space && in_token) {
      tokens.push_back({start, pos});
      in_token = false;
    } else if (!space && !in_token) {
      start = pos;
      in_token = true;
    }
    pos += cp.length;
  }
  if (in_token) tokens.push_back({start, s.size()});
  return tokens;
}

std::string_view trim_punct(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size()) {
    auto cp = decode_at(s, begin);
    if (!cp.valid || !is_punct(cp.value)) break;
    begin += cp.length;
  }
  // Walk forward recording the end of the last non-punctuation code point.
  std::size_t end = begin;
  for (std::size_t pos = begin; pos < s.size();) {
    auto cp = decode_at(s, pos);
    pos += cp.length;
    if (!cp.valid || !is_punct(cp.value)) end = pos;
  }
  return s.substr(begin, end - begin);
}

}  // namespace curator::text
