// Copyright 2026 The hetsearch Authors.
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
#include <optional>
#include <string>
#include <string_view>

namespace hetsearch::text {

/// Byte offset of the first ill-formed UTF-8 sequence, or nullopt.
std::optional<std::size_t> find_invalid_utf8(std::string_view s);

/// Unicode NFC. Ill-formed input is replaced with U+FFFD.
std::string nfc(std::string_view s);

/// NFC followed by full lowercase mapping (root locale).
std::string normalize(std::string_view s);

std::u32string to_u32(std::string_view s);
std::string to_utf8(std::u32string_view s);

/// Letters and digits in the Unicode sense.
bool is_word_char(char32_t c);

/// Classic unit-cost edit distance over code points.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// 1 - levenshtein / max length, computed on normalize()d code points.
/// Two empty strings are identical (1.0).
double normalized_similarity(std::string_view a, std::string_view b);

/// Collapses runs of whitespace to a single space and trims both ends.
std::string collapse_whitespace(std::string_view s);

}  // namespace hetsearch::text
