// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emolabel/corpus.hpp"
#include "emolabel/sentiment.hpp"

namespace emolabel::test {

// Test-local deterministic randomness, kept separate from anything the
// library does so oracle checks stay independent.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::size_t index(std::size_t n) { return next() % n; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  Sentiment sentiment() { return kAllSentiments[index(kNumSentiments)]; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

inline Tweet make_tweet(std::string id, std::string text,
                        std::optional<Sentiment> gold = std::nullopt) {
  Tweet t;
  t.id = std::move(id);
  t.text = std::move(text);
  t.gold = gold;
  return t;
}

inline Corpus make_corpus(std::vector<Tweet> tweets,
                          std::string name = "test") {
  Corpus c;
  c.name = std::move(name);
  c.tweets = std::move(tweets);
  return c;
}

}  // namespace emolabel::test
