// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#include "emolabel/emoji_lexicon.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "emolabel/unicode.hpp"
#include "test_util.hpp"

using namespace emolabel;

namespace {

EmojiLexicon tiny_lexicon() {
  // 😀 positive, 😡 negative, 😐 neutral
  return EmojiLexicon::from_entries({{{"😡"}, {"😐"}, {"😀"}}});
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& body) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("builtin lexicon has 12 negative, 10 neutral, 12 positive") {
  const EmojiLexicon lex = EmojiLexicon::builtin();
  CHECK(lex.size(Sentiment::Negative) == 12);
  CHECK(lex.size(Sentiment::Neutral) == 10);
  CHECK(lex.size(Sentiment::Positive) == 12);
  CHECK(lex.size() == 34);
  CHECK(lex.source() == "builtin");
  CHECK(lex.lookup("😀") == Sentiment::Positive);
  CHECK(lex.lookup("😡") == Sentiment::Negative);
  CHECK(lex.lookup("🤔") == Sentiment::Neutral);
  CHECK_FALSE(lex.lookup("🦄").has_value());
}

TEST_CASE("builtin keys are canonical") {
  const EmojiLexicon lex = EmojiLexicon::builtin();
  for (Sentiment s : kAllSentiments) {
    for (const std::string& key : lex.entries(s)) {
      CHECK(normalize_emoji_utf8(key) == key);
    }
  }
}

TEST_CASE("normalize_emoji strips modifiers and variation selectors") {
  // U+1F44D U+1F3FE -> U+1F44D
  CHECK(normalize_emoji(U"\U0001F44D\U0001F3FE") ==
        std::u32string{U'\U0001F44D'});
  // U+2764 U+FE0F -> U+2764
  CHECK(normalize_emoji(U"❤️") == std::u32string{U'❤'});
  // canonical input is untouched
  CHECK(normalize_emoji(U"\U0001F600") == std::u32string{U'\U0001F600'});
  // ZWJ joins survive
  const std::u32string family = U"\U0001F468‍\U0001F469‍\U0001F467";
  CHECK(normalize_emoji(family) == family);
}

TEST_CASE("normalize_emoji is idempotent on random sequences") {
  test::TestRng rng(99);
  const char32_t pool[] = {U'\U0001F44D', U'\U0001F3FE', U'️', U'‍',
                           U'\U0001F600', U'❤',     U'︎', U'a'};
  for (int i = 0; i < 200; ++i) {
    std::u32string seq;
    const std::size_t len = rng.index(6);
    for (std::size_t k = 0; k < len; ++k) {
      seq.push_back(pool[rng.index(std::size(pool))]);
    }
    const std::u32string once = normalize_emoji(seq);
    CHECK(normalize_emoji(once) == once);
  }
}

TEST_CASE("from_entries rejects an emoji assigned to two classes") {
  CHECK_THROWS_AS(
      EmojiLexicon::from_entries({{{"😀"}, {}, {"😀"}}}),
      LexiconError);
  // canonical collision counts too: with and without a skin tone
  CHECK_THROWS_AS(
      EmojiLexicon::from_entries({{{"👍🏾"}, {}, {"👍"}}}),
      LexiconError);
}

TEST_CASE("from_entries collapses duplicates within one class") {
  // same emoji with and without variation selector
  const EmojiLexicon lex =
      EmojiLexicon::from_entries({{{}, {}, {"❤️", "❤"}}});
  CHECK(lex.size(Sentiment::Positive) == 1);
  CHECK(lex.lookup("❤") == Sentiment::Positive);
}

TEST_CASE("load_lexicon without a path returns the builtin") {
  const LexiconLoad load = load_lexicon(std::nullopt);
  CHECK(load.lexicon.size(Sentiment::Negative) == 12);
  CHECK(load.lexicon.size(Sentiment::Neutral) == 10);
  CHECK(load.lexicon.size(Sentiment::Positive) == 12);
  CHECK(load.warnings.empty());
}

TEST_CASE("load_lexicon parses codepoint escapes to canonical keys") {
  const auto path = write_temp(
      "emolabel_lex_escape.json",
      R"({"negative": [], "neutral": [], "positive": ["U+1F44D U+1F3FE"]})");
  const LexiconLoad load = load_lexicon(path);
  CHECK(load.lexicon.lookup("👍") == Sentiment::Positive);
  CHECK(load.lexicon.size() == 1);
  // empty classes are warned about, not fatal
  CHECK(load.warnings.size() == 2);
}

TEST_CASE("load_lexicon rejects duplicate class assignment") {
  const auto path = write_temp(
      "emolabel_lex_dup.json",
      R"({"negative": ["U+1F600"], "neutral": [], "positive": ["U+1F600"]})");
  CHECK_THROWS_AS(load_lexicon(path), LexiconError);
}

TEST_CASE("load_lexicon rejects malformed escapes and bad files") {
  const auto bad_escape = write_temp(
      "emolabel_lex_badescape.json",
      R"({"negative": ["U+ZZZZ"], "neutral": [], "positive": []})");
  CHECK_THROWS_AS(load_lexicon(bad_escape), LexiconError);

  const auto bad_json =
      write_temp("emolabel_lex_badjson.json", "{not json");
  CHECK_THROWS_AS(load_lexicon(bad_json), LexiconError);

  CHECK_THROWS_AS(load_lexicon(std::filesystem::path("/nonexistent/lex")),
                  LexiconError);
}

TEST_CASE("write_lexicon output reloads to the same lexicon") {
  const EmojiLexicon lex = EmojiLexicon::builtin();
  std::ostringstream out;
  write_lexicon(lex, out);

  const auto path = write_temp("emolabel_lex_roundtrip.json", out.str());
  const LexiconLoad load = load_lexicon(path);
  for (Sentiment s : kAllSentiments) {
    CHECK(load.lexicon.entries(s) == lex.entries(s));
  }

  std::ostringstream again;
  write_lexicon(load.lexicon, again);
  CHECK(again.str() == out.str());
}

TEST_CASE("extract_emojis counts per class and strips emoji from residual") {
  const EmojiLexicon lex = tiny_lexicon();

  EmojiExtraction got = extract_emojis("great 😀😀😡", lex);
  CHECK(got.counts.positive == 2);
  CHECK(got.counts.negative == 1);
  CHECK(got.counts.neutral == 0);
  CHECK(got.residual == "great ");

  got = extract_emojis("no emojis here", lex);
  CHECK(got.counts == EmojiCounts{});
  CHECK(got.residual == "no emojis here");
}

TEST_CASE("extract_emojis matches through skin tones, drops unknown emoji") {
  const EmojiLexicon lex =
      EmojiLexicon::from_entries({{{}, {}, {"👍"}}});
  EmojiExtraction got = extract_emojis("👍🏾!", lex);
  CHECK(got.counts.positive == 1);
  CHECK(got.residual == "!");

  // unknown emoji: counted nowhere, still removed from the residual
  got = extract_emojis("x🦄y", lex);
  CHECK(got.counts == EmojiCounts{});
  CHECK(got.residual == "xy");
}

TEST_CASE("extract_emojis counts are permutation invariant") {
  const EmojiLexicon lex = tiny_lexicon();
  test::TestRng rng(7);
  std::vector<std::string> clusters = {"😀", "😀", "😡", "😐", "ok",
                                       " ",  "👍", "!",  "😡"};
  const EmojiCounts baseline = [&] {
    std::string text;
    for (const auto& c : clusters) text += c;
    return extract_emojis(text, lex).counts;
  }();
  for (int i = 0; i < 50; ++i) {
    rng.shuffle(clusters);
    std::string text;
    for (const auto& c : clusters) text += c;
    CHECK(extract_emojis(text, lex).counts == baseline);
  }
}

TEST_CASE("extract_emojis count sum equals lexicon hits over clusters") {
  const EmojiLexicon lex = EmojiLexicon::builtin();
  const std::string samples[] = {
      "great 😀😀😡 day", "👍🏾 thanks ❤️", "no hits", "🤔🤔🤔",
      "mixed 🦄 😢 text 🇿🇦"};
  for (const std::string& text : samples) {
    const EmojiCounts counts = extract_emojis(text, lex).counts;
    int expected = 0;
    for (std::string_view cluster : uni::graphemes(text)) {
      if (lex.contains(normalize_emoji_utf8(cluster))) ++expected;
    }
    CHECK(counts.total() == expected);
  }
}

TEST_CASE("strip_emojis removes exactly the emoji clusters") {
  CHECK(strip_emojis("great 😀😀😡") == "great ");
  CHECK(strip_emojis("a👍🏾b👨‍👩‍👧c") == "abc");
  CHECK(strip_emojis("plain") == "plain");
  CHECK(strip_emojis("") == "");
}
