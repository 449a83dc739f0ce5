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

#include <optional>
#include <string_view>

namespace curator {

// Sub-task A label.
enum class Label : unsigned char { kOff, kNot };

inline constexpr std::string_view label_name(Label l) {
  return l == Label::kOff ? "OFF" : "NOT";
}

// Exact, case-sensitive match of "OFF" / "NOT".
inline std::optional<Label> parse_label(std::string_view s) {
  if (s == "OFF") return Label::kOff;
  if (s == "NOT") return Label::kNot;
  return std::nullopt;
}

}  // namespace curator
