// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "emolabel/corpus.hpp"
#include "emolabel/pipeline.hpp"

namespace emolabel {

enum class CorpusFormat { Jsonl, Csv };

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a corpus from disk. JSONL records look like
//   {"id": "1", "text": "...", "lang": "nso", "gold": "positive"}
// with lang and gold optional; unknown fields are ignored. CSV needs a
// header row naming at least id and text (lang/gold optional, any column
// order, RFC 4180 quoting). Text is NFC-normalized on the way in.
//
// Errors (CorpusError) name the line and field for malformed records,
// list duplicated ids, and reject empty corpora.
Corpus read_corpus(const std::filesystem::path& path, CorpusFormat format);
Corpus read_corpus(std::istream& in, CorpusFormat format, std::string name);

// Writes the corpus itself as JSONL, corpus order, no label fields.
// write then read_corpus round-trips id, text (NFC) and gold exactly.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

// Writes one JSONL line per tweet, corpus order, carrying the input
// fields plus label, step and per-class diagnostics. Output is
// byte-identical for identical inputs. Throws CorpusError if the run
// lacks a result for any tweet id.
void write_labels(const Corpus& corpus, const LabelRun& run,
                  const std::filesystem::path& path);
void write_labels(const Corpus& corpus, const LabelRun& run,
                  std::ostream& out);

struct Diagnostic {
  std::string tweet_id;
  std::string message;
};

// Non-fatal corpus checks: texts that clean() reduces to nothing, gold
// labels missing when an evaluation is intended, and records whose text
// had to be NFC-normalized at ingest.
std::vector<Diagnostic> validate_corpus(const Corpus& corpus,
                                        bool require_gold = false);

}  // namespace emolabel
