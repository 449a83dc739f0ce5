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

#include <gtest/gtest.h>

#include "curator/text.hpp"

using namespace curator::text;

TEST(Utf8, DecodesMultiByteSequences) {
  const std::string s = "aæ😀";
  auto a = decode_at(s, 0);
  auto ae = decode_at(s, 1);
  auto smile = decode_at(s, 3);
  EXPECT_EQ(a.value, U'a');
  EXPECT_EQ(ae.value, U'æ');
  EXPECT_EQ(ae.length, 2u);
  EXPECT_EQ(smile.value, U'😀');
  EXPECT_EQ(smile.length, 4u);
  EXPECT_EQ(count_code_points(s), 3u);
}

TEST(Utf8, InvalidByteAdvancesByOne) {
  const std::string s = "\xff" "a\xc3";
  auto bad = decode_at(s, 0);
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.length, 1u);
  EXPECT_TRUE(decode_at(s, 1).valid);
  EXPECT_FALSE(decode_at(s, 2).valid);
  EXPECT_EQ(count_code_points(s), 3u);
}

TEST(Utf8, AppendRoundTrips) {
  std::string out;
  for (char32_t cp : {U'x', U'ß', U'ع', U'🧑'}) append_utf8(out, cp);
  EXPECT_EQ(out, "xßع🧑");
  EXPECT_EQ(to_code_points(out), (std::vector<char32_t>{U'x', U'ß', U'ع', U'🧑'}));
}

TEST(Classes, Basics) {
  EXPECT_TRUE(is_space(U' '));
  EXPECT_TRUE(is_space(U'　'));
  EXPECT_FALSE(is_space(U'a'));
  EXPECT_TRUE(is_punct(U'!'));
  EXPECT_TRUE(is_punct(U'…'));
  EXPECT_TRUE(is_punct(U'،'));
  EXPECT_FALSE(is_punct(U'a'));
  EXPECT_TRUE(is_alpha(U'Σ'));
  EXPECT_TRUE(is_word_char(U'_'));
  EXPECT_TRUE(is_word_char(U'7'));
  EXPECT_FALSE(is_word_char(U'#'));
}

TEST(Classes, UppercaseMeansHasLowercaseMapping) {
  EXPECT_TRUE(has_lowercase_mapping(U'A'));
  EXPECT_TRUE(has_lowercase_mapping(U'Ø'));
  EXPECT_TRUE(has_lowercase_mapping(U'ǅ'));
  EXPECT_TRUE(has_lowercase_mapping(U'Ⓐ'));
  EXPECT_FALSE(has_lowercase_mapping(U'a'));
  EXPECT_FALSE(has_lowercase_mapping(U'ß'));
  EXPECT_FALSE(has_lowercase_mapping(U'ع'));
}

TEST(Lower, SimpleMapping) {
  EXPECT_EQ(to_lower("GET ØL ΣΑΣ"), "get øl σασ");
  EXPECT_EQ(to_lower(U'Ⓐ'), U'ⓐ');
}

TEST(Tokens, SplitsOnUnicodeWhitespace) {
  const std::string s = "  ab　cd e ";
  auto toks = whitespace_tokens(s);
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(s.substr(toks[0].begin, toks[0].end - toks[0].begin), "ab");
  EXPECT_EQ(s.substr(toks[1].begin, toks[1].end - toks[1].begin), "cd");
  EXPECT_EQ(s.substr(toks[2].begin, toks[2].end - toks[2].begin), "e");
}

TEST(Tokens, TrimPunct) {
  EXPECT_EQ(trim_punct("¡¿fool?!"), "fool");
  EXPECT_EQ(trim_punct("«ord»"), "ord");
  EXPECT_EQ(trim_punct("!!!"), "");
  EXPECT_EQ(trim_punct("a.b"), "a.b");
}
