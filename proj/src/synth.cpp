// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#include "emolabel/synth.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "emolabel/emoji_lexicon.hpp"

namespace emolabel {
namespace {

// Fixed-increment 64-bit mixer. Standard-library distributions are not
// reproducible across implementations, so all draws go through this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform index in [0, n), n > 0.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

std::string planted_word(Sentiment s, std::size_t i) {
  static constexpr const char* kPrefix[kNumSentiments] = {"negw", "neuw",
                                                          "posw"};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%03zu", kPrefix[index_of(s)], i);
  return buf;
}

std::string shared_word(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "shw_%03zu", i);
  return buf;
}

}  // namespace

void SynthConfig::validate() const {
  if (n_tweets == 0) throw SynthError("n_tweets must be positive");
  double sum = 0.0;
  for (double p : class_priors) {
    if (p < 0.0 || p > 1.0) throw SynthError("class priors must be in [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw SynthError("class priors must sum to 1");
  }
  for (double f : {emoji_density, noise}) {
    if (f < 0.0 || f > 1.0) {
      throw SynthError("emoji_density and noise must be in [0, 1]");
    }
  }
  if (vocab_per_class == 0 && emoji_density < 1.0) {
    throw SynthError(
        "vocab_per_class of 0 needs emoji_density of 1, otherwise emoji-free "
        "tweets can never be labelled");
  }
}

Corpus generate(const SynthConfig& config) {
  config.validate();
  SplitMix64 rng(config.seed);

  std::array<std::vector<std::string>, kNumSentiments> class_words;
  for (Sentiment s : kAllSentiments) {
    auto& words = class_words[index_of(s)];
    words.reserve(config.vocab_per_class);
    for (std::size_t i = 0; i < config.vocab_per_class; ++i) {
      words.push_back(planted_word(s, i));
    }
  }
  std::vector<std::string> shared_words;
  shared_words.reserve(config.shared_vocab);
  for (std::size_t i = 0; i < config.shared_vocab; ++i) {
    shared_words.push_back(shared_word(i));
  }

  const EmojiLexicon lex = EmojiLexicon::builtin();
  std::array<std::vector<std::string>, kNumSentiments> class_emojis;
  for (Sentiment s : kAllSentiments) {
    class_emojis[index_of(s)] = lex.entries(s);
  }

  Corpus corpus;
  corpus.name = "synth-seed" + std::to_string(config.seed);
  corpus.tweets.reserve(config.n_tweets);

  const std::size_t pool = config.vocab_per_class + config.shared_vocab;
  for (std::size_t i = 0; i < config.n_tweets; ++i) {
    Tweet tweet;
    char id[16];
    std::snprintf(id, sizeof id, "t%05zu", i + 1);
    tweet.id = id;

    const double r = rng.unit();
    Sentiment gold = Sentiment::Positive;
    double cumulative = 0.0;
    for (Sentiment s : kAllSentiments) {
      cumulative += config.class_priors[index_of(s)];
      if (r < cumulative) {
        gold = s;
        break;
      }
    }
    tweet.gold = gold;

    std::vector<const std::string*> parts;
    if (pool > 0) {
      const std::size_t n_words = 10 + rng.index(11);
      parts.reserve(n_words + 6);
      for (std::size_t w = 0; w < n_words; ++w) {
        const std::size_t k = rng.index(pool);
        parts.push_back(k < config.vocab_per_class
                            ? &class_words[index_of(gold)][k]
                            : &shared_words[k - config.vocab_per_class]);
      }
    }

    if (config.noise > 0.0 && rng.unit() < config.noise &&
        config.vocab_per_class > 0) {
      const std::size_t n_noise = 1 + rng.index(3);
      for (std::size_t w = 0; w < n_noise; ++w) {
        // One of the two other classes, in serialization order.
        std::size_t pick = rng.index(2);
        Sentiment other = gold;
        for (Sentiment s : kAllSentiments) {
          if (s == gold) continue;
          if (pick == 0) {
            other = s;
            break;
          }
          --pick;
        }
        const std::string* word =
            &class_words[index_of(other)][rng.index(config.vocab_per_class)];
        parts.insert(parts.begin() + rng.index(parts.size() + 1), word);
      }
    }

    if (config.emoji_density > 0.0 && rng.unit() < config.emoji_density) {
      const std::size_t n_emojis = 1 + rng.index(3);
      const auto& emojis = class_emojis[index_of(gold)];
      for (std::size_t e = 0; e < n_emojis; ++e) {
        const std::string* emoji = &emojis[rng.index(emojis.size())];
        parts.insert(parts.begin() + rng.index(parts.size() + 1), emoji);
      }
    }

    std::string text;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (p > 0) text += ' ';
      text += *parts[p];
    }
    tweet.text = std::move(text);
    corpus.tweets.push_back(std::move(tweet));
  }
  return corpus;
}

}  // namespace emolabel
