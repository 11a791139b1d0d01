// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "emolabel/corpus.hpp"
#include "emolabel/sentiment.hpp"

namespace emolabel {

class SynthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Knobs for the planted-signal corpus generator. class_priors is indexed
// by index_of(Sentiment), so [negative, neutral, positive].
struct SynthConfig {
  std::size_t n_tweets = 1000;
  std::array<double, kNumSentiments> class_priors = {1.0 / 3, 1.0 / 3,
                                                     1.0 / 3};
  double emoji_density = 0.6;
  std::size_t vocab_per_class = 200;
  std::size_t shared_vocab = 20;
  double noise = 0.0;
  std::uint64_t seed = 42;

  // Throws SynthError on priors not summing to 1, fractions outside
  // [0, 1], n_tweets of 0, or a configuration whose tweets could never
  // be labelled (no class vocabulary and emojis not guaranteed).
  void validate() const;
};

// Builds a gold-labelled corpus where each tweet draws its class from
// the priors, its words from that class's synthetic vocabulary plus a
// shared pool, with probability emoji_density 1 to 3 emojis of its class
// from the builtin lexicon, and with probability noise 1 to 3 words from
// the other classes. Same config, same corpus, byte for byte.
Corpus generate(const SynthConfig& config);

}  // namespace emolabel
