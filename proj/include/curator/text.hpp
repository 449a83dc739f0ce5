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
#include <string>
#include <string_view>
#include <vector>

namespace curator::text {

// One decoded UTF-8 sequence. Ill-formed bytes decode as a single invalid
// unit of length 1 so callers can copy them through untouched.
struct CodePoint {
  char32_t value = 0;
  std::size_t length = 0;
  bool valid = false;
};

CodePoint decode_at(std::string_view s, std::size_t pos);
void append_utf8(std::string& out, char32_t cp);
std::vector<char32_t> to_code_points(std::string_view s);
std::size_t count_code_points(std::string_view s);

// Unicode White_Space.
bool is_space(char32_t cp);
// General category P*.
bool is_punct(char32_t cp);
// General category L*.
bool is_alpha(char32_t cp);
// Letters, digits, combining marks and '_'.
bool is_word_char(char32_t cp);
// True when the simple lowercase mapping changes the code point. This is the
// notion of "uppercase" used by casing normalization.
bool has_lowercase_mapping(char32_t cp);
char32_t to_lower(char32_t cp);

// Code-point-wise simple lowercase; invalid bytes are copied.
std::string to_lower(std::string_view s);

// Byte span of a whitespace-delimited token inside the original string.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<TokenSpan> whitespace_tokens(std::string_view s);

// Strips leading and trailing punctuation code points.
std::string_view trim_punct(std::string_view s);

}  // namespace curator::text
