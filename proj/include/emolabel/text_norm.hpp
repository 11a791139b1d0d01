// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace emolabel {

using TokenList = std::vector<std::string>;

// Strips tweet markup: URLs (http:// or https:// through the next
// whitespace), @mentions (the '@' plus its [A-Za-z0-9_]+ handle), the '#'
// of hashtags (the word stays), and a leading RT marker. Whitespace runs
// collapse to single spaces and the ends are trimmed.
std::string clean(std::string_view text);

// Splits on default Unicode word boundaries, keeps segments containing at
// least one letter or digit, case-folds and NFC-normalizes each. Language
// independent by construction: no stopwords, no stemming, no minimum
// length. Diacritics are preserved.
TokenList tokenize(std::string_view text);

}  // namespace emolabel
