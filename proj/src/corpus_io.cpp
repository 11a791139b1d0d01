// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

#include "emolabel/corpus_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "emolabel/text_norm.hpp"
#include "emolabel/unicode.hpp"

namespace emolabel {
namespace {

std::string at_line(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

// Shared record sink for both formats. Empty lang/gold mean absent,
// which is how CSV expresses missing optionals.
void add_tweet(Corpus& corpus, std::unordered_set<std::string>& seen_ids,
               std::size_t line, std::string id, std::string text,
               std::optional<std::string> lang,
               std::optional<std::string> gold) {
  if (id.empty()) throw CorpusError(at_line(line) + "field \"id\" is empty");
  if (!seen_ids.insert(id).second) {
    throw CorpusError(at_line(line) + "duplicate id \"" + id + "\"");
  }
  if (text.empty()) {
    throw CorpusError(at_line(line) + "field \"text\" is empty");
  }
  Tweet tweet;
  tweet.id = std::move(id);
  uni::NfcResult norm = uni::nfc(text);
  tweet.text = std::move(norm.text);
  tweet.nfc_fixed = norm.changed;
  if (lang && !lang->empty()) tweet.lang = std::move(*lang);
  if (gold && !gold->empty()) {
    std::optional<Sentiment> parsed = parse_sentiment(*gold);
    if (!parsed) {
      throw CorpusError(at_line(line) + "field \"gold\": unknown sentiment \"" +
                        *gold + "\"");
    }
    tweet.gold = *parsed;
  }
  corpus.tweets.push_back(std::move(tweet));
}

std::string require_string(const nlohmann::json& record, const char* key,
                           std::size_t line) {
  auto it = record.find(key);
  if (it == record.end()) {
    throw CorpusError(at_line(line) + "missing field \"" + key + "\"");
  }
  if (!it->is_string()) {
    throw CorpusError(at_line(line) + "field \"" + key +
                      "\" must be a string");
  }
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const nlohmann::json& record,
                                           const char* key,
                                           std::size_t line) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw CorpusError(at_line(line) + "field \"" + key +
                      "\" must be a string");
  }
  return it->get<std::string>();
}

void read_jsonl(std::istream& in, Corpus& corpus) {
  std::unordered_set<std::string> seen_ids;
  std::string line_text;
  std::size_t line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    if (!line_text.empty() && line_text.back() == '\r') line_text.pop_back();
    if (line_text.find_first_not_of(" \t") == std::string::npos) continue;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line_text);
    } catch (const nlohmann::json::parse_error& e) {
      throw CorpusError(at_line(line) + "invalid JSON (" +
                        std::string(e.what()) + ")");
    }
    if (!record.is_object()) {
      throw CorpusError(at_line(line) + "record is not a JSON object");
    }
    add_tweet(corpus, seen_ids, line, require_string(record, "id", line),
              require_string(record, "text", line),
              optional_string(record, "lang", line),
              optional_string(record, "gold", line));
  }
}

// RFC 4180 reader. Quoted fields may span lines; `line` tracks physical
// lines so errors can name where a record started.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& fields, std::size_t& record_line) {
    fields.clear();
    int c = in_.get();
    if (c == std::istream::traits_type::eof()) return false;
    record_line = line_;
    std::string field;
    bool in_quotes = false;
    bool after_quote = false;
    while (true) {
      if (c == std::istream::traits_type::eof()) {
        if (in_quotes) {
          throw CorpusError(at_line(record_line) +
                            "unterminated quoted field");
        }
        fields.push_back(std::move(field));
        return true;
      }
      const char ch = static_cast<char>(c);
      if (in_quotes) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            in_quotes = false;
            after_quote = true;
          }
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
      } else if (ch == ',') {
        fields.push_back(std::move(field));
        field.clear();
        after_quote = false;
      } else if (ch == '\n' || (ch == '\r' && in_.peek() == '\n')) {
        if (ch == '\r') in_.get();
        ++line_;
        fields.push_back(std::move(field));
        return true;
      } else if (after_quote) {
        throw CorpusError(at_line(line_) +
                          "unexpected character after closing quote");
      } else if (ch == '"' && field.empty()) {
        in_quotes = true;
      } else {
        field.push_back(ch);
      }
      c = in_.get();
    }
  }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
};

void check_utf8(const std::string& value, const char* key,
                std::size_t line) {
  if (!uni::is_valid_utf8(value)) {
    throw CorpusError(at_line(line) + "field \"" + key +
                      "\" is not valid UTF-8");
  }
}

void read_csv(std::istream& in, Corpus& corpus) {
  // Spreadsheet exports often lead with a UTF-8 byte order mark.
  if (in.peek() == 0xEF) {
    char bom[3] = {};
    in.read(bom, 3);
    if (in.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF)) {
      throw CorpusError("line 1: invalid byte order mark");
    }
  }

  CsvReader reader(in);
  std::vector<std::string> fields;
  std::size_t record_line = 0;
  if (!reader.next(fields, record_line)) throw CorpusError("empty corpus");

  std::unordered_map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    columns.emplace(fields[i], i);
  }
  for (const char* required : {"id", "text"}) {
    if (!columns.contains(required)) {
      throw CorpusError(std::string("csv header missing column \"") +
                        required + '"');
    }
  }
  const std::size_t n_columns = fields.size();
  auto column = [&](const char* name) -> std::optional<std::size_t> {
    auto it = columns.find(name);
    if (it == columns.end()) return std::nullopt;
    return it->second;
  };
  const std::size_t id_col = *column("id");
  const std::size_t text_col = *column("text");
  const std::optional<std::size_t> lang_col = column("lang");
  const std::optional<std::size_t> gold_col = column("gold");

  std::unordered_set<std::string> seen_ids;
  while (reader.next(fields, record_line)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != n_columns) {
      throw CorpusError(at_line(record_line) + "expected " +
                        std::to_string(n_columns) + " fields, got " +
                        std::to_string(fields.size()));
    }
    check_utf8(fields[id_col], "id", record_line);
    check_utf8(fields[text_col], "text", record_line);
    std::optional<std::string> lang;
    if (lang_col) {
      check_utf8(fields[*lang_col], "lang", record_line);
      lang = std::move(fields[*lang_col]);
    }
    std::optional<std::string> gold;
    if (gold_col) gold = std::move(fields[*gold_col]);
    add_tweet(corpus, seen_ids, record_line, std::move(fields[id_col]),
              std::move(fields[text_col]), std::move(lang), std::move(gold));
  }
}

}  // namespace

Corpus read_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open file: " + path.string());
  return read_corpus(in, format, path.filename().string());
}

Corpus read_corpus(std::istream& in, CorpusFormat format, std::string name) {
  Corpus corpus;
  corpus.name = std::move(name);
  if (format == CorpusFormat::Jsonl) {
    read_jsonl(in, corpus);
  } else {
    read_csv(in, corpus);
  }
  if (corpus.tweets.empty()) throw CorpusError("empty corpus");
  return corpus;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw CorpusError("cannot open file for writing: " + path.string());
  }
  write_corpus(corpus, out);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Tweet& tweet : corpus.tweets) {
    nlohmann::ordered_json record;
    record["id"] = tweet.id;
    record["text"] = tweet.text;
    if (tweet.lang) record["lang"] = *tweet.lang;
    if (tweet.gold) record["gold"] = std::string(to_string(*tweet.gold));
    out << record.dump() << '\n';
  }
  if (!out) throw CorpusError("write failed");
}

void write_labels(const Corpus& corpus, const LabelRun& run,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw CorpusError("cannot open file for writing: " + path.string());
  }
  write_labels(corpus, run, out);
}

void write_labels(const Corpus& corpus, const LabelRun& run,
                  std::ostream& out) {
  const auto by_id = run.by_id();
  for (const Tweet& tweet : corpus.tweets) {
    auto it = by_id.find(tweet.id);
    if (it == by_id.end()) {
      throw CorpusError("run has no result for id \"" + tweet.id + "\"");
    }
    const LabelResult& result = *it->second;

    nlohmann::ordered_json record;
    record["id"] = tweet.id;
    record["text"] = tweet.text;
    if (tweet.lang) record["lang"] = *tweet.lang;
    if (tweet.gold) record["gold"] = std::string(to_string(*tweet.gold));
    if (result.label) {
      record["label"] = std::string(to_string(*result.label));
    } else {
      record["label"] = nullptr;
    }
    record["step"] = std::string(to_string(result.step));
    nlohmann::ordered_json emoji;
    nlohmann::ordered_json coverage;
    for (Sentiment s : kAllSentiments) {
      emoji[std::string(to_string(s))] = result.emoji_counts.by(s);
      coverage[std::string(to_string(s))] = result.coverage.by(s);
    }
    nlohmann::ordered_json diagnostics;
    diagnostics["emoji"] = std::move(emoji);
    diagnostics["coverage"] = std::move(coverage);
    record["diagnostics"] = std::move(diagnostics);
    out << record.dump() << '\n';
  }
  if (!out) throw CorpusError("write failed");
}

std::vector<Diagnostic> validate_corpus(const Corpus& corpus,
                                        bool require_gold) {
  std::vector<Diagnostic> out;
  for (const Tweet& tweet : corpus.tweets) {
    if (tweet.nfc_fixed) {
      out.push_back({tweet.id, "text was not in NFC form; normalized at load"});
    }
    if (clean(tweet.text).empty()) {
      out.push_back({tweet.id, "text empty after cleaning"});
    }
    if (require_gold && !tweet.gold) {
      out.push_back({tweet.id, "missing gold label"});
    }
  }
  return out;
}

}  // namespace emolabel
