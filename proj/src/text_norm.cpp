// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#include "emolabel/text_norm.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "emolabel/unicode.hpp"

namespace emolabel {

namespace {

bool is_handle_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool starts_with_url_scheme(std::string_view s, std::size_t pos) {
  auto matches = [&](std::string_view scheme) {
    if (pos + scheme.size() > s.size()) return false;
    for (std::size_t k = 0; k < scheme.size(); ++k) {
      char c = s[pos + k];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c != scheme[k]) return false;
    }
    return true;
  };
  return matches("http://") || matches("https://");
}

// Decodes the codepoint at byte offset `pos`; returns its width in bytes.
int peek_codepoint(std::string_view s, std::size_t pos, UChar32& cp) {
  int32_t i = static_cast<int32_t>(pos);
  const int32_t len = static_cast<int32_t>(s.size());
  U8_NEXT(s.data(), i, len, cp);
  return i - static_cast<int32_t>(pos);
}

bool is_space_cp(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }

}  // namespace

std::string clean(std::string_view text) {
  std::string out;
  out.reserve(text.size());

  std::size_t i = 0;
  const std::size_t n = text.size();

  // Leading whitespace, then an optional RT marker followed by whitespace.
  {
    std::size_t j = i;
    UChar32 cp;
    while (j < n) {
      int w = peek_codepoint(text, j, cp);
      if (!is_space_cp(cp)) break;
      j += static_cast<std::size_t>(w);
    }
    if (j + 2 <= n && (text[j] == 'R' || text[j] == 'r') &&
        (text[j + 1] == 'T' || text[j + 1] == 't')) {
      std::size_t k = j + 2;
      if (k < n) {
        int w = peek_codepoint(text, k, cp);
        if (is_space_cp(cp)) i = k + static_cast<std::size_t>(w);
      }
    }
  }

  bool pending_space = false;
  auto emit_space = [&] {
    if (!out.empty()) pending_space = true;
  };

  while (i < n) {
    const char c = text[i];

    if (starts_with_url_scheme(text, i)) {
      while (i < n) {
        UChar32 cp;
        int w = peek_codepoint(text, i, cp);
        if (is_space_cp(cp)) break;
        i += static_cast<std::size_t>(w);
      }
      emit_space();
      continue;
    }

    if (c == '@' && i + 1 < n && is_handle_char(text[i + 1])) {
      i += 1;
      while (i < n && is_handle_char(text[i])) ++i;
      emit_space();
      continue;
    }

    if (c == '#' && i + 1 < n) {
      UChar32 cp;
      peek_codepoint(text, i + 1, cp);
      if ((cp >= 0 && u_isalnum(cp)) || text[i + 1] == '_') {
        ++i;  // drop the '#', keep the word
        continue;
      }
    }

    UChar32 cp;
    int w = peek_codepoint(text, i, cp);
    if (is_space_cp(cp)) {
      emit_space();
    } else {
      if (pending_space) {
        out.push_back(' ');
        pending_space = false;
      }
      out.append(text.substr(i, static_cast<std::size_t>(w)));
    }
    i += static_cast<std::size_t>(w);
  }

  return out;
}

TokenList tokenize(std::string_view text) {
  TokenList tokens;
  for (std::string_view segment : uni::words(text)) {
    if (!uni::has_letter_or_digit(segment)) continue;
    tokens.push_back(uni::nfc(uni::fold_case(segment)).text);
  }
  return tokens;
}

}  // namespace emolabel
