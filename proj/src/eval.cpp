// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#include "emolabel/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace emolabel {
namespace {

void check_lengths(std::size_t pred, std::size_t gold) {
  if (pred != gold) {
    throw EvalError("pred and gold lengths differ: " + std::to_string(pred) +
                    " vs " + std::to_string(gold));
  }
  if (gold == 0) throw EvalError("no evaluable tweets");
}

std::string percent(std::optional<double> value) {
  if (!value) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", *value * 100.0);
  return buf;
}

nlohmann::ordered_json confusion_json(const ConfusionMatrix& m) {
  nlohmann::ordered_json doc;
  for (Sentiment gold : kAllSentiments) {
    nlohmann::ordered_json row;
    for (Sentiment pred : kAllSentiments) {
      row[std::string(to_string(pred))] = m.at(gold, pred);
    }
    row["unlabelled"] = m.unlabelled[index_of(gold)];
    doc[std::string(to_string(gold))] = std::move(row);
  }
  return doc;
}

nlohmann::ordered_json slice_json(const SliceMetrics& s) {
  nlohmann::ordered_json doc;
  doc["n"] = s.n;
  doc["share"] = s.share;
  if (s.accuracy) {
    doc["accuracy"] = *s.accuracy;
  } else {
    doc["accuracy"] = nullptr;
  }
  if (s.macro_f1) {
    doc["macro_f1"] = *s.macro_f1;
  } else {
    doc["macro_f1"] = nullptr;
  }
  doc["confusion"] = confusion_json(s.confusion);
  return doc;
}

SliceMetrics slice_metrics(std::span<const std::optional<Sentiment>> pred,
                           std::span<const Sentiment> gold,
                           std::size_t total) {
  SliceMetrics m;
  m.n = gold.size();
  m.share = total == 0 ? 0.0 : static_cast<double>(m.n) / total;
  if (m.n > 0) {
    m.accuracy = accuracy(pred, gold);
    m.macro_f1 = macro_f1(pred, gold);
    m.confusion = confusion(pred, gold);
  }
  return m;
}

}  // namespace

std::int64_t ConfusionMatrix::total() const {
  std::int64_t sum = 0;
  for (const auto& row : counts) {
    for (std::int64_t c : row) sum += c;
  }
  for (std::int64_t c : unlabelled) sum += c;
  return sum;
}

double accuracy(std::span<const std::optional<Sentiment>> pred,
                std::span<const Sentiment> gold) {
  check_lengths(pred.size(), gold.size());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i] && *pred[i] == gold[i]) ++correct;
  }
  return static_cast<double>(correct) / gold.size();
}

double macro_f1(std::span<const std::optional<Sentiment>> pred,
                std::span<const Sentiment> gold) {
  check_lengths(pred.size(), gold.size());
  std::array<std::int64_t, kNumSentiments> tp{};
  std::array<std::int64_t, kNumSentiments> gold_n{};
  std::array<std::int64_t, kNumSentiments> pred_n{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    gold_n[index_of(gold[i])] += 1;
    if (pred[i]) {
      pred_n[index_of(*pred[i])] += 1;
      if (*pred[i] == gold[i]) tp[index_of(gold[i])] += 1;
    }
  }
  double sum = 0.0;
  int present = 0;
  for (Sentiment s : kAllSentiments) {
    const std::size_t k = index_of(s);
    if (gold_n[k] == 0 && pred_n[k] == 0) continue;  // class never occurs
    ++present;
    const double p =
        pred_n[k] == 0 ? 0.0 : static_cast<double>(tp[k]) / pred_n[k];
    const double r =
        gold_n[k] == 0 ? 0.0 : static_cast<double>(tp[k]) / gold_n[k];
    if (p + r > 0.0) sum += 2.0 * p * r / (p + r);
  }
  // present >= 1 because gold is non-empty.
  return sum / present;
}

ConfusionMatrix confusion(std::span<const std::optional<Sentiment>> pred,
                          std::span<const Sentiment> gold) {
  check_lengths(pred.size(), gold.size());
  ConfusionMatrix m;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i]) {
      m.at(gold[i], *pred[i]) += 1;
    } else {
      m.unlabelled[index_of(gold[i])] += 1;
    }
  }
  return m;
}

double weighted_combined(std::size_t n1, double acc1, std::size_t n3,
                         double acc3) {
  if (n1 + n3 == 0) throw EvalError("no evaluable tweets");
  return (static_cast<double>(n1) * acc1 + static_cast<double>(n3) * acc3) /
         static_cast<double>(n1 + n3);
}

EvalReport report(const LabelRun& run, const Corpus& corpus) {
  std::vector<std::string> missing;
  for (const Tweet& tweet : corpus.tweets) {
    if (!tweet.gold) missing.push_back(tweet.id);
  }
  if (!missing.empty()) {
    std::string message = "missing gold labels for ids:";
    const std::size_t shown = std::min<std::size_t>(missing.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) message += " " + missing[i];
    if (missing.size() > shown) {
      message += " and " + std::to_string(missing.size() - shown) + " more";
    }
    throw EvalError(message);
  }

  const auto by_id = run.by_id();
  std::vector<std::optional<Sentiment>> emoji_pred, words_pred, all_pred;
  std::vector<Sentiment> emoji_gold, words_gold, all_gold;
  for (const Tweet& tweet : corpus.tweets) {
    auto it = by_id.find(tweet.id);
    if (it == by_id.end()) {
      throw EvalError("run has no result for id \"" + tweet.id + "\"");
    }
    const LabelResult& result = *it->second;
    all_pred.push_back(result.label);
    all_gold.push_back(*tweet.gold);
    if (result.step == Step::Emoji) {
      emoji_pred.push_back(result.label);
      emoji_gold.push_back(*tweet.gold);
    } else {
      words_pred.push_back(result.label);
      words_gold.push_back(*tweet.gold);
    }
  }

  EvalReport rep;
  rep.corpus_name = corpus.name;
  const std::size_t total = corpus.size();
  rep.emoji = slice_metrics(emoji_pred, emoji_gold, total);
  rep.words = slice_metrics(words_pred, words_gold, total);
  rep.combined = slice_metrics(all_pred, all_gold, total);
  return rep;
}

void write_report_json(const EvalReport& rep, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["corpus"] = rep.corpus_name;
  nlohmann::ordered_json slices;
  slices["emoji"] = slice_json(rep.emoji);
  slices["words"] = slice_json(rep.words);
  slices["combined"] = slice_json(rep.combined);
  doc["slices"] = std::move(slices);
  out << doc.dump(2) << '\n';
}

std::string format_report_table(const EvalReport& rep) {
  std::string out = "corpus: " + rep.corpus_name + " (" +
                    std::to_string(rep.combined.n) + " tweets)\n";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-10s %7s %8s %9s %9s\n", "slice", "n",
                "share", "accuracy", "macro-F1");
  out += buf;
  const std::array<std::pair<const char*, const SliceMetrics*>, 3> rows = {
      {{"emoji", &rep.emoji},
       {"words", &rep.words},
       {"combined", &rep.combined}}};
  for (const auto& [name, slice] : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %7zu %8s %9s %9s\n", name, slice->n,
                  percent(slice->share).c_str(),
                  percent(slice->accuracy).c_str(),
                  percent(slice->macro_f1).c_str());
    out += buf;
  }
  return out;
}

}  // namespace emolabel
