// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emolabel/sentiment.hpp"

namespace emolabel {

struct Tweet {
  std::string id;
  std::string text;  // NFC-normalized at ingest
  std::optional<std::string> lang;
  std::optional<Sentiment> gold;
  bool nfc_fixed = false;  // input text was not NFC and was normalized
};

// Ordered collection of tweets with unique ids. Read-only after
// construction; safe to share across concurrent readers.
struct Corpus {
  std::string name;
  std::vector<Tweet> tweets;

  std::size_t size() const { return tweets.size(); }
  bool empty() const { return tweets.empty(); }
};

}  // namespace emolabel
