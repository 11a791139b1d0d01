// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#include "emolabel/pipeline.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "emolabel/text_norm.hpp"

namespace emolabel {
namespace {

// Runs fn(0..n-1). The parallel path demands a pure fn writing only to
// its own slot; any exception is rethrown on the calling thread.
template <typename Fn>
void for_each_index(std::size_t n, Execution exec, const Fn& fn) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(emolabel_for_each_index)
      {
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

// Tweet text as seen by the word stages.
TokenList word_tokens(std::string_view text) {
  return tokenize(clean(strip_emojis(text)));
}

std::optional<Sentiment> strict_max(const ClassCounts& counts) {
  const int neg = counts.negative;
  const int neu = counts.neutral;
  const int pos = counts.positive;
  if (neg > neu && neg > pos) return Sentiment::Negative;
  if (neu > neg && neu > pos) return Sentiment::Neutral;
  if (pos > neg && pos > neu) return Sentiment::Positive;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Step step) {
  switch (step) {
    case Step::Emoji:
      return "emoji";
    case Step::Words:
      return "words";
    case Step::Fallback:
      return "fallback";
    case Step::Unlabelled:
      return "unlabelled";
  }
  return "unlabelled";
}

std::optional<Step> parse_step(std::string_view name) {
  for (Step step : {Step::Emoji, Step::Words, Step::Fallback,
                    Step::Unlabelled}) {
    if (name == to_string(step)) return step;
  }
  return std::nullopt;
}

std::unordered_set<std::string>& WordLists::by(Sentiment s) {
  switch (s) {
    case Sentiment::Negative:
      return negative;
    case Sentiment::Neutral:
      return neutral;
    case Sentiment::Positive:
      return positive;
  }
  return neutral;
}

const std::unordered_set<std::string>& WordLists::by(Sentiment s) const {
  return const_cast<WordLists*>(this)->by(s);
}

bool WordLists::disjoint() const {
  for (const auto& word : negative) {
    if (neutral.contains(word) || positive.contains(word)) return false;
  }
  for (const auto& word : neutral) {
    if (positive.contains(word)) return false;
  }
  return true;
}

void write_word_lists(const WordLists& lists, std::ostream& out) {
  nlohmann::ordered_json doc;
  for (Sentiment s : kAllSentiments) {
    std::vector<std::string> words(lists.by(s).begin(), lists.by(s).end());
    std::sort(words.begin(), words.end());
    doc[std::string(to_string(s))] = std::move(words);
  }
  out << doc.dump(2) << '\n';
}

std::optional<Sentiment> emoji_majority(const EmojiCounts& counts) {
  // All-zero counts have no strict maximum and fall through to nullopt.
  return strict_max(counts);
}

std::optional<Sentiment> Step1Result::majority_label() const {
  if (labelled.empty()) return std::nullopt;
  ClassCounts tally{};
  for (const LabelResult& r : labelled) {
    if (r.label) tally.by(*r.label) += 1;
  }
  Sentiment best = Sentiment::Negative;
  for (Sentiment s : kAllSentiments) {
    if (tally.by(s) > tally.by(best)) best = s;
  }
  return best;
}

Step1Result step1_emojis(const Corpus& corpus, const EmojiLexicon& lex,
                         Execution exec) {
  const std::size_t n = corpus.size();
  std::vector<EmojiCounts> counts(n);
  for_each_index(n, exec, [&](std::size_t i) {
    counts[i] = extract_emojis(corpus.tweets[i].text, lex).counts;
  });

  // Serial partition keeps output order equal to corpus order in both
  // execution modes.
  Step1Result out;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto label = emoji_majority(counts[i])) {
      LabelResult r;
      r.tweet_id = corpus.tweets[i].id;
      r.label = *label;
      r.step = Step::Emoji;
      r.emoji_counts = counts[i];
      out.labelled.push_back(std::move(r));
      out.labelled_index.push_back(i);
    } else {
      out.remaining.push_back(i);
      out.remaining_counts.push_back(counts[i]);
    }
  }
  return out;
}

WordLists step2_lists(std::span<const LabelledTweet> labelled,
                      Execution exec) {
  const std::size_t n = labelled.size();
  std::vector<TokenList> tokens(n);
  for_each_index(n, exec, [&](std::size_t i) {
    tokens[i] = word_tokens(labelled[i].tweet->text);
  });

  std::array<std::unordered_set<std::string>, kNumSentiments> raw;
  for (std::size_t i = 0; i < n; ++i) {
    auto& set = raw[index_of(labelled[i].label)];
    for (std::string& tok : tokens[i]) set.insert(std::move(tok));
  }

  // A word survives only in the single class it is exclusive to.
  WordLists lists;
  for (Sentiment s : kAllSentiments) {
    auto& keep = lists.by(s);
    for (const std::string& word : raw[index_of(s)]) {
      bool shared = false;
      for (Sentiment other : kAllSentiments) {
        if (other != s && raw[index_of(other)].contains(word)) {
          shared = true;
          break;
        }
      }
      if (!shared) keep.insert(word);
    }
  }
  return lists;
}

std::vector<LabelResult> step3_words(const Corpus& corpus,
                                     std::span<const std::size_t> remaining,
                                     const WordLists& lists,
                                     const PipelineConfig& config,
                                     std::optional<Sentiment> step1_majority,
                                     Execution exec) {
  const std::size_t n = remaining.size();
  std::vector<LabelResult> out(n);
  const Sentiment majority = step1_majority.value_or(Sentiment::Neutral);

  for_each_index(n, exec, [&](std::size_t i) {
    const Tweet& tweet = corpus.tweets[remaining[i]];
    LabelResult r;
    r.tweet_id = tweet.id;

    TokenList tokens = word_tokens(tweet.text);
    if (config.coverage_mode == CoverageMode::Types) {
      std::sort(tokens.begin(), tokens.end());
      tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    }
    for (const std::string& tok : tokens) {
      for (Sentiment s : kAllSentiments) {
        if (lists.by(s).contains(tok)) {
          r.coverage.by(s) += 1;
          break;  // lists are disjoint, at most one class matches
        }
      }
    }

    // A strict maximum is necessarily > 0, so it always wins.
    if (auto best = strict_max(r.coverage)) {
      r.label = *best;
      r.step = Step::Words;
    } else {
      switch (config.fallback) {
        case FallbackPolicy::Neutral:
          r.label = Sentiment::Neutral;
          r.step = Step::Fallback;
          break;
        case FallbackPolicy::MajorityClass:
          r.label = majority;
          r.step = Step::Fallback;
          break;
        case FallbackPolicy::None:
          r.label = std::nullopt;
          r.step = Step::Unlabelled;
          break;
      }
    }
    out[i] = std::move(r);
  });
  return out;
}

std::size_t LabelRun::n_step1() const {
  std::size_t n = 0;
  for (const LabelResult& r : results) {
    if (r.step == Step::Emoji) ++n;
  }
  return n;
}

std::size_t LabelRun::n_step3() const { return results.size() - n_step1(); }

std::unordered_map<std::string_view, const LabelResult*> LabelRun::by_id()
    const {
  std::unordered_map<std::string_view, const LabelResult*> map;
  map.reserve(results.size());
  for (const LabelResult& r : results) map.emplace(r.tweet_id, &r);
  return map;
}

LabelRun run_pipeline(const Corpus& corpus, const EmojiLexicon& lex,
                      const PipelineConfig& config, Execution exec) {
  Step1Result s1 = step1_emojis(corpus, lex, exec);

  std::vector<LabelledTweet> labelled;
  labelled.reserve(s1.labelled.size());
  for (std::size_t k = 0; k < s1.labelled.size(); ++k) {
    labelled.push_back(
        {&corpus.tweets[s1.labelled_index[k]], *s1.labelled[k].label});
  }
  WordLists lists = step2_lists(labelled, exec);

  std::vector<LabelResult> s3 = step3_words(
      corpus, s1.remaining, lists, config, s1.majority_label(), exec);

  LabelRun run;
  run.config = config;
  run.word_lists = std::move(lists);
  run.results.resize(corpus.size());
  for (std::size_t k = 0; k < s1.labelled.size(); ++k) {
    run.results[s1.labelled_index[k]] = std::move(s1.labelled[k]);
  }
  for (std::size_t k = 0; k < s1.remaining.size(); ++k) {
    s3[k].emoji_counts = s1.remaining_counts[k];
    run.results[s1.remaining[k]] = std::move(s3[k]);
  }
  return run;
}

}  // namespace emolabel
