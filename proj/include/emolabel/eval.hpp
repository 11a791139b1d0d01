// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "emolabel/corpus.hpp"
#include "emolabel/pipeline.hpp"
#include "emolabel/sentiment.hpp"

namespace emolabel {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rows are gold classes, columns predicted classes, plus one unlabelled
// column per gold class for predictions that carry no label.
struct ConfusionMatrix {
  std::array<std::array<std::int64_t, kNumSentiments>, kNumSentiments>
      counts{};
  std::array<std::int64_t, kNumSentiments> unlabelled{};

  std::int64_t& at(Sentiment gold, Sentiment pred) {
    return counts[index_of(gold)][index_of(pred)];
  }
  std::int64_t at(Sentiment gold, Sentiment pred) const {
    return counts[index_of(gold)][index_of(pred)];
  }
  std::int64_t total() const;

  bool operator==(const ConfusionMatrix&) const = default;
};

// Fraction of predictions equal to gold; an absent prediction is wrong.
// Throws EvalError on length mismatch or empty input.
double accuracy(std::span<const std::optional<Sentiment>> pred,
                std::span<const Sentiment> gold);

// Unweighted mean of per-class F1 over the classes present in gold or
// pred. Precision and recall fall back to 0 on an empty denominator and
// F1 to 0 when precision + recall = 0. Throws like accuracy.
double macro_f1(std::span<const std::optional<Sentiment>> pred,
                std::span<const Sentiment> gold);

ConfusionMatrix confusion(std::span<const std::optional<Sentiment>> pred,
                          std::span<const Sentiment> gold);

// Count-weighted mean of two slice accuracies. Throws EvalError when
// both counts are zero.
double weighted_combined(std::size_t n1, double acc1, std::size_t n3,
                         double acc3);

// Metrics over one slice of a run. Metrics are absent when the slice is
// empty; share is the slice's fraction of the whole corpus.
struct SliceMetrics {
  std::size_t n = 0;
  double share = 0.0;
  std::optional<double> accuracy;
  std::optional<double> macro_f1;
  ConfusionMatrix confusion;
};

struct EvalReport {
  std::string corpus_name;
  SliceMetrics emoji;     // tweets labelled from emoji counts
  SliceMetrics words;     // tweets labelled from word lists or fallback
  SliceMetrics combined;  // the whole corpus
};

// Slices a run against gold labels. Throws EvalError when gold labels
// are missing (listing the ids) or when the run lacks a tweet's result.
EvalReport report(const LabelRun& run, const Corpus& corpus);

// Machine form of the report, stable key order.
void write_report_json(const EvalReport& rep, std::ostream& out);

// Aligned four-column table (n, share, accuracy, macro-F1) with one
// slice per row, percentages to one decimal.
std::string format_report_table(const EvalReport& rep);

}  // namespace emolabel
