// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

// Thin wrappers over ICU. Everything operates on UTF-8; segmentation
// results are views into the caller's buffer.

namespace emolabel::uni {

struct NfcResult {
  std::string text;
  bool changed = false;  // input was not already NFC
};

// Canonical composition (NFC). Invalid byte sequences are replaced with
// U+FFFD rather than rejected; validate separately where rejection matters.
NfcResult nfc(std::string_view utf8);

// Default Unicode full case folding, e.g. "KUDU" -> "kudu", "ß" -> "ss".
std::string fold_case(std::string_view utf8);

// Extended grapheme cluster segmentation (UAX #29).
std::vector<std::string_view> graphemes(std::string_view utf8);

// Default word-boundary segmentation (UAX #29). Returns every segment,
// including whitespace and punctuation runs; callers filter.
std::vector<std::string_view> words(std::string_view utf8);

bool is_valid_utf8(std::string_view bytes);

// True if the string contains at least one letter or decimal digit.
bool has_letter_or_digit(std::string_view utf8);

// True for grapheme clusters that render as emoji: any codepoint with
// Extended_Pictographic, an emoji skin-tone modifier, or a regional
// indicator. Keycap bases (digits, '#', '*') are deliberately excluded.
bool is_emoji_cluster(std::string_view cluster);

std::u32string to_utf32(std::string_view utf8);
std::string to_utf8(std::u32string_view codepoints);

}  // namespace emolabel::uni
