// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "emolabel/corpus.hpp"
#include "emolabel/emoji_lexicon.hpp"
#include "emolabel/sentiment.hpp"

namespace emolabel {

// How the tweet received (or failed to receive) its label.
enum class Step { Emoji, Words, Fallback, Unlabelled };

std::string_view to_string(Step step);
std::optional<Step> parse_step(std::string_view name);

// What to do with a tweet the word stage cannot decide (coverage tie or
// zero coverage everywhere).
enum class FallbackPolicy { Neutral, None, MajorityClass };

// Whether coverage counts token occurrences or distinct token types.
enum class CoverageMode { Occurrences, Types };

struct PipelineConfig {
  FallbackPolicy fallback = FallbackPolicy::Neutral;
  CoverageMode coverage_mode = CoverageMode::Occurrences;
};

// Per-tweet kernels are pure functions over immutable inputs, so the
// parallel path must produce bit-identical results to the serial one;
// Serial is kept as the reference implementation and for benchmarking.
enum class Execution { Serial, Parallel };

struct LabelResult {
  std::string tweet_id;
  std::optional<Sentiment> label;
  Step step = Step::Unlabelled;
  EmojiCounts emoji_counts;
  ClassCounts coverage;
};

// The three class word lists induced from emoji-labelled tweets.
// Pairwise disjoint by construction.
struct WordLists {
  std::unordered_set<std::string> negative;
  std::unordered_set<std::string> neutral;
  std::unordered_set<std::string> positive;

  std::unordered_set<std::string>& by(Sentiment s);
  const std::unordered_set<std::string>& by(Sentiment s) const;
  bool disjoint() const;
  std::size_t total_words() const {
    return negative.size() + neutral.size() + positive.size();
  }
};

// Sorted-JSON export, {"negative": [...], "neutral": [...], "positive":
// [...]}, reproducible across runs.
void write_word_lists(const WordLists& lists, std::ostream& out);

// Majority rule over per-class counts: the class with a strictly greater
// count than both others, or nothing when the maximum is shared.
std::optional<Sentiment> emoji_majority(const EmojiCounts& counts);

struct Step1Result {
  std::vector<LabelResult> labelled;        // step == Emoji, corpus order
  std::vector<std::size_t> labelled_index;  // corpus positions of labelled
  std::vector<std::size_t> remaining;       // corpus positions of the rest
  std::vector<EmojiCounts> remaining_counts;  // tallies for those positions

  // Most frequent label among the emoji-labelled tweets; ties resolve
  // to the earlier class in serialization order, empty input to nothing.
  std::optional<Sentiment> majority_label() const;
};

// Stage one: label every tweet whose emoji tally has a strict majority
// class; tweets with no lexicon emojis or a tied maximum are routed to
// the remaining set. labelled and remaining partition the corpus.
Step1Result step1_emojis(const Corpus& corpus, const EmojiLexicon& lex,
                         Execution exec = Execution::Parallel);

struct LabelledTweet {
  const Tweet* tweet;
  Sentiment label;
};

// Stage two: per class, the set of distinct tokens over that class's
// tweets (emoji clusters stripped, then clean + tokenize), minus every
// word that occurs in at least one other class's set.
WordLists step2_lists(std::span<const LabelledTweet> labelled,
                      Execution exec = Execution::Parallel);

// Stage three: label each remaining tweet with the class whose word list
// covers it strictly best; ties and zero coverage go to the configured
// fallback. step1_majority feeds FallbackPolicy::MajorityClass and
// defaults to Neutral when absent.
std::vector<LabelResult> step3_words(
    const Corpus& corpus, std::span<const std::size_t> remaining,
    const WordLists& lists, const PipelineConfig& config,
    std::optional<Sentiment> step1_majority = std::nullopt,
    Execution exec = Execution::Parallel);

struct LabelRun {
  std::vector<LabelResult> results;  // corpus order, one per tweet
  WordLists word_lists;
  PipelineConfig config;

  std::size_t n_step1() const;  // step == Emoji
  std::size_t n_step3() const;  // words, fallback and unlabelled

  // Lookup table over results, keyed by tweet id.
  std::unordered_map<std::string_view, const LabelResult*> by_id() const;
};

// The full three-stage run. Literally composes step1_emojis, step2_lists
// and step3_words; deterministic for fixed inputs and independent of the
// execution mode and of corpus order (up to per-id results).
LabelRun run_pipeline(const Corpus& corpus, const EmojiLexicon& lex,
                      const PipelineConfig& config = {},
                      Execution exec = Execution::Parallel);

}  // namespace emolabel
