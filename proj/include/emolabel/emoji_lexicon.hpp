// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emolabel/sentiment.hpp"

namespace emolabel {

// Per-class emoji tally produced by extract_emojis.
using EmojiCounts = ClassCounts;

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonicalizes an emoji codepoint sequence for platform-independent
// matching: variation selectors (U+FE0E, U+FE0F) and skin-tone modifiers
// (U+1F3FB..U+1F3FF) are dropped; ZWJ sequences stay intact. Idempotent.
std::u32string normalize_emoji(std::u32string_view seq);
std::string normalize_emoji_utf8(std::string_view seq);

// Removes every emoji grapheme cluster from the text, keeping everything
// else byte for byte. Used to keep word lists free of emoji tokens.
std::string strip_emojis(std::string_view text);

// Maps canonical emoji codepoint sequences to the sentiment class they
// indicate. Immutable after construction; safe for concurrent reads.
class EmojiLexicon {
 public:
  // The built-in indicator set: 12 negative, 10 neutral, 12 positive
  // emojis chosen to be broadly unambiguous. It is a replaceable default;
  // pass a lexicon file to load_lexicon to substitute your own.
  static EmojiLexicon builtin();

  // Builds a lexicon from per-class emoji sequences (UTF-8, indexed by
  // Sentiment). Keys are canonicalized; a sequence assigned to two
  // different classes raises LexiconError. Duplicates within one class
  // collapse silently (e.g. an entry listed with and without U+FE0F).
  static EmojiLexicon from_entries(
      const std::array<std::vector<std::string>, kNumSentiments>& per_class,
      std::string source = "memory");

  std::optional<Sentiment> lookup(std::string_view canonical_utf8) const;
  bool contains(std::string_view canonical_utf8) const {
    return lookup(canonical_utf8).has_value();
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t size(Sentiment s) const { return class_sizes_[index_of(s)]; }

  // Canonical keys of one class, sorted, for deterministic export.
  std::vector<std::string> entries(Sentiment s) const;

  const std::string& source() const { return source_; }

 private:
  std::unordered_map<std::string, Sentiment> entries_;
  std::array<std::size_t, kNumSentiments> class_sizes_{};
  std::string source_;
};

struct LexiconLoad {
  EmojiLexicon lexicon;
  std::vector<std::string> warnings;  // e.g. an empty class
};

// No path: the built-in default. With a path: parses the lexicon file
// format, a UTF-8 JSON object {"negative": [...], "neutral": [...],
// "positive": [...]} whose entries are either literal emoji strings or
// space-separated "U+XXXX" escapes.
LexiconLoad load_lexicon(const std::optional<std::filesystem::path>& path);

// Writes a lexicon back out in the file format load_lexicon reads,
// entries sorted within each class.
void write_lexicon(const EmojiLexicon& lex, std::ostream& out);

struct EmojiExtraction {
  EmojiCounts counts;
  std::string residual;  // text with all emoji clusters removed
};

// Segments text into extended grapheme clusters and tallies, per class,
// the clusters whose canonical form is a lexicon key. Counting is
// token-based: every occurrence counts. Matched clusters and all other
// emoji clusters are dropped from the residual text.
EmojiExtraction extract_emojis(std::string_view text, const EmojiLexicon& lex);

}  // namespace emolabel
