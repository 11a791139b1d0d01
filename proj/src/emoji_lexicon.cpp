// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#include "emolabel/emoji_lexicon.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "emolabel/unicode.hpp"

namespace emolabel {

namespace {

bool is_skin_tone(char32_t c) { return c >= 0x1F3FB && c <= 0x1F3FF; }
bool is_variation_selector(char32_t c) { return c == 0xFE0E || c == 0xFE0F; }

// The default indicator emojis, one string per entry, grouped by class.
// A stand-in set of commonly unambiguous emojis, not a fixed standard;
// replace it via a lexicon file when a corpus calls for different
// indicators (the Emoji Sentiment Ranking is a good source).
constexpr const char* kBuiltinNegative[] = {
    "\U0001F621",  // pouting face
    "\U0001F620",  // angry face
    "\U0001F622",  // crying face
    "\U0001F62D",  // loudly crying face
    "\U0001F61E",  // disappointed face
    "\U0001F614",  // pensive face
    "\U0001F624",  // face with steam from nose
    "\U0001F623",  // persevering face
    "\U0001F612",  // unamused face
    "\U0001F92C",  // face with symbols on mouth
    "\U0001F494",  // broken heart
    "\U0001F44E",  // thumbs down
};

constexpr const char* kBuiltinNeutral[] = {
    "\U0001F610",  // neutral face
    "\U0001F611",  // expressionless face
    "\U0001F914",  // thinking face
    "\U0001F636",  // face without mouth
    "\U0001F644",  // face with rolling eyes
    "\U0001F60F",  // smirking face
    "\U0001F937",  // person shrugging
    "\U0001F62C",  // grimacing face
    "\U0001F928",  // face with raised eyebrow
    "\U0001F62E",  // face with open mouth
};

constexpr const char* kBuiltinPositive[] = {
    "\U0001F600",  // grinning face
    "\U0001F601",  // beaming face with smiling eyes
    "\U0001F602",  // face with tears of joy
    "\U0001F60A",  // smiling face with smiling eyes
    "\U0001F60D",  // smiling face with heart-eyes
    "\U0001F618",  // face blowing a kiss
    "\U0001F923",  // rolling on the floor laughing
    "\U0001F970",  // smiling face with hearts
    "❤",      // red heart
    "\U0001F44D",  // thumbs up
    "\U0001F389",  // party popper
    "\U0001F495",  // two hearts
};

// Parses one lexicon file entry: either space-separated "U+XXXX" escapes
// or a literal emoji string.
std::string parse_entry(const std::string& entry) {
  std::string_view sv(entry);
  auto looks_escaped = [&] {
    return sv.size() >= 2 && (sv[0] == 'U' || sv[0] == 'u') && sv[1] == '+';
  };
  if (!looks_escaped()) return entry;

  std::u32string cps;
  std::size_t pos = 0;
  while (pos < sv.size()) {
    while (pos < sv.size() && sv[pos] == ' ') ++pos;
    if (pos >= sv.size()) break;
    if (pos + 2 > sv.size() || (sv[pos] != 'U' && sv[pos] != 'u') ||
        sv[pos + 1] != '+') {
      throw LexiconError("malformed codepoint escape in entry '" + entry +
                         "'");
    }
    pos += 2;
    std::size_t start = pos;
    char32_t value = 0;
    while (pos < sv.size() && sv[pos] != ' ') {
      char c = sv[pos];
      int digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
      else
        throw LexiconError("malformed codepoint escape in entry '" + entry +
                           "'");
      value = value * 16 + static_cast<char32_t>(digit);
      ++pos;
    }
    if (pos == start || pos - start > 6 || value > 0x10FFFF) {
      throw LexiconError("malformed codepoint escape in entry '" + entry +
                         "'");
    }
    cps.push_back(value);
  }
  if (cps.empty()) {
    throw LexiconError("malformed codepoint escape in entry '" + entry + "'");
  }
  return uni::to_utf8(cps);
}

std::string escape_key(std::string_view key) {
  std::string out;
  for (char32_t cp : uni::to_utf32(key)) {
    if (!out.empty()) out.push_back(' ');
    char buf[16];
    std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
    out += buf;
  }
  return out;
}

}  // namespace

std::u32string normalize_emoji(std::u32string_view seq) {
  std::u32string out;
  out.reserve(seq.size());
  for (char32_t c : seq) {
    if (is_variation_selector(c) || is_skin_tone(c)) continue;
    out.push_back(c);
  }
  return out;
}

std::string normalize_emoji_utf8(std::string_view seq) {
  return uni::to_utf8(normalize_emoji(uni::to_utf32(seq)));
}

std::string strip_emojis(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::string_view cluster : uni::graphemes(text)) {
    if (!uni::is_emoji_cluster(cluster)) out.append(cluster);
  }
  return out;
}

EmojiLexicon EmojiLexicon::from_entries(
    const std::array<std::vector<std::string>, kNumSentiments>& per_class,
    std::string source) {
  EmojiLexicon lex;
  lex.source_ = std::move(source);
  for (Sentiment s : kAllSentiments) {
    for (const std::string& raw : per_class[index_of(s)]) {
      std::string key = normalize_emoji_utf8(raw);
      if (key.empty()) {
        throw LexiconError("entry '" + raw +
                           "' is empty after canonicalization");
      }
      auto [it, inserted] = lex.entries_.emplace(key, s);
      if (!inserted) {
        if (it->second != s) {
          throw LexiconError("emoji '" + escape_key(key) +
                             "' assigned to both '" +
                             std::string(to_string(it->second)) + "' and '" +
                             std::string(to_string(s)) + "'");
        }
        continue;  // same-class duplicate collapses
      }
      ++lex.class_sizes_[index_of(s)];
    }
  }
  return lex;
}

EmojiLexicon EmojiLexicon::builtin() {
  std::array<std::vector<std::string>, kNumSentiments> per_class;
  for (const char* e : kBuiltinNegative)
    per_class[index_of(Sentiment::Negative)].emplace_back(e);
  for (const char* e : kBuiltinNeutral)
    per_class[index_of(Sentiment::Neutral)].emplace_back(e);
  for (const char* e : kBuiltinPositive)
    per_class[index_of(Sentiment::Positive)].emplace_back(e);
  return from_entries(per_class, "builtin");
}

std::optional<Sentiment> EmojiLexicon::lookup(
    std::string_view canonical_utf8) const {
  auto it = entries_.find(std::string(canonical_utf8));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> EmojiLexicon::entries(Sentiment s) const {
  std::vector<std::string> keys;
  for (const auto& [key, cls] : entries_) {
    if (cls == s) keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

LexiconLoad load_lexicon(const std::optional<std::filesystem::path>& path) {
  if (!path) return {EmojiLexicon::builtin(), {}};

  std::ifstream in(*path, std::ios::binary);
  if (!in) {
    throw LexiconError("cannot open lexicon file: " + path->string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw LexiconError("invalid lexicon JSON in " + path->string() + ": " +
                       e.what());
  }
  if (!doc.is_object()) {
    throw LexiconError("lexicon file must be a JSON object");
  }

  std::array<std::vector<std::string>, kNumSentiments> per_class;
  for (Sentiment s : kAllSentiments) {
    std::string name(to_string(s));
    if (!doc.contains(name)) continue;
    const auto& arr = doc.at(name);
    if (!arr.is_array()) {
      throw LexiconError("lexicon field '" + name + "' must be an array");
    }
    for (const auto& item : arr) {
      if (!item.is_string()) {
        throw LexiconError("lexicon entries in '" + name +
                           "' must be strings");
      }
      per_class[index_of(s)].push_back(
          parse_entry(item.get<std::string>()));
    }
  }

  LexiconLoad out{EmojiLexicon::from_entries(per_class, path->string()), {}};
  for (Sentiment s : kAllSentiments) {
    if (out.lexicon.size(s) == 0) {
      out.warnings.push_back("lexicon class '" + std::string(to_string(s)) +
                             "' is empty");
    }
  }
  return out;
}

void write_lexicon(const EmojiLexicon& lex, std::ostream& out) {
  nlohmann::ordered_json doc;
  for (Sentiment s : kAllSentiments) {
    doc[std::string(to_string(s))] = lex.entries(s);
  }
  out << doc.dump(2) << '\n';
}

EmojiExtraction extract_emojis(std::string_view text,
                               const EmojiLexicon& lex) {
  EmojiExtraction out;
  out.residual.reserve(text.size());
  for (std::string_view cluster : uni::graphemes(text)) {
    std::string canonical = normalize_emoji_utf8(cluster);
    if (auto cls = lex.lookup(canonical)) {
      out.counts.by(*cls) += 1;
      continue;
    }
    if (uni::is_emoji_cluster(cluster)) continue;  // unknown emoji: drop
    out.residual.append(cluster);
  }
  return out;
}

}  // namespace emolabel
