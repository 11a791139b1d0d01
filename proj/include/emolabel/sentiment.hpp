// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace emolabel {

// Three-way sentiment label. The Negative < Neutral < Positive order is
// fixed so serialization is deterministic; it carries no semantic meaning.
enum class Sentiment : std::uint8_t { Negative = 0, Neutral = 1, Positive = 2 };

inline constexpr std::size_t kNumSentiments = 3;

inline constexpr std::array<Sentiment, kNumSentiments> kAllSentiments = {
    Sentiment::Negative, Sentiment::Neutral, Sentiment::Positive};

constexpr std::size_t index_of(Sentiment s) {
  return static_cast<std::size_t>(s);
}

constexpr std::string_view to_string(Sentiment s) {
  switch (s) {
    case Sentiment::Negative: return "negative";
    case Sentiment::Neutral: return "neutral";
    case Sentiment::Positive: return "positive";
  }
  return "?";
}

// Accepts the canonical lowercase names; ASCII case differences are folded
// so spreadsheet-exported labels like "Positive" still parse.
inline std::optional<Sentiment> parse_sentiment(std::string_view name) {
  auto eq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      char ca = a[i];
      if (ca >= 'A' && ca <= 'Z') ca = static_cast<char>(ca - 'A' + 'a');
      if (ca != b[i]) return false;
    }
    return true;
  };
  for (Sentiment s : kAllSentiments) {
    if (eq(name, to_string(s))) return s;
  }
  return std::nullopt;
}

// Per-class integer tally, used both for emoji counts and word coverage.
struct ClassCounts {
  int negative = 0;
  int neutral = 0;
  int positive = 0;

  int& by(Sentiment s) {
    switch (s) {
      case Sentiment::Negative: return negative;
      case Sentiment::Neutral: return neutral;
      default: return positive;
    }
  }
  int by(Sentiment s) const {
    switch (s) {
      case Sentiment::Negative: return negative;
      case Sentiment::Neutral: return neutral;
      default: return positive;
    }
  }
  int total() const { return negative + neutral + positive; }

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

}  // namespace emolabel
