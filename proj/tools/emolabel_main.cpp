// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: label a corpus, evaluate against gold labels,
// export the emoji lexicon, or generate a synthetic corpus. Data goes to
// files or standard output; summaries and warnings go to standard error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emolabel/corpus_io.hpp"
#include "emolabel/emoji_lexicon.hpp"
#include "emolabel/eval.hpp"
#include "emolabel/pipeline.hpp"
#include "emolabel/synth.hpp"

namespace {

using namespace emolabel;

struct LabelOptions {
  std::string input;
  CorpusFormat format = CorpusFormat::Jsonl;
  std::string output;
  std::string lexicon;
  PipelineConfig config;
  std::string report;
  std::string word_lists;
  bool serial = false;
};

struct GenOptions {
  SynthConfig config;
  std::vector<double> priors;
  std::string output;
};

template <typename Fn>
void with_output(const std::string& path, const Fn& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    if (!std::cout) throw CorpusError("write failed: standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot open file for writing: " + path);
  fn(out);
  out.flush();
  if (!out) throw CorpusError("write failed: " + path);
}

EmojiLexicon load_or_builtin(const std::string& path) {
  std::optional<std::filesystem::path> p;
  if (!path.empty()) p = path;
  LexiconLoad load = load_lexicon(p);
  for (const std::string& warning : load.warnings) {
    std::cerr << "emolabel: warning: " << warning << '\n';
  }
  return std::move(load.lexicon);
}

void print_diagnostics(const std::vector<Diagnostic>& diags) {
  for (const Diagnostic& d : diags) {
    std::cerr << "emolabel: warning: tweet " << d.tweet_id << ": "
              << d.message << '\n';
  }
}

void print_summary(const LabelRun& run) {
  const std::size_t total = run.results.size();
  const std::size_t n1 = run.n_step1();
  const std::size_t n3 = run.n_step3();
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "step1: %zu (%.1f%%), step3: %zu (%.1f%%)\n", n1,
                total ? 100.0 * n1 / total : 0.0, n3,
                total ? 100.0 * n3 / total : 0.0);
  std::cerr << buf;
}

int run_label(const LabelOptions& opts) {
  const Corpus corpus = read_corpus(opts.input, opts.format);
  print_diagnostics(validate_corpus(corpus));
  const EmojiLexicon lex = load_or_builtin(opts.lexicon);
  const LabelRun run =
      run_pipeline(corpus, lex, opts.config,
                   opts.serial ? Execution::Serial : Execution::Parallel);
  with_output(opts.output,
              [&](std::ostream& out) { write_labels(corpus, run, out); });
  if (!opts.word_lists.empty()) {
    with_output(opts.word_lists, [&](std::ostream& out) {
      write_word_lists(run.word_lists, out);
    });
  }
  print_summary(run);
  return 0;
}

int run_eval(const LabelOptions& opts) {
  const Corpus corpus = read_corpus(opts.input, opts.format);
  const EmojiLexicon lex = load_or_builtin(opts.lexicon);
  const LabelRun run =
      run_pipeline(corpus, lex, opts.config,
                   opts.serial ? Execution::Serial : Execution::Parallel);
  const EvalReport rep = report(run, corpus);
  if (!opts.output.empty()) {
    write_labels(corpus, run, std::filesystem::path(opts.output));
  }
  if (!opts.report.empty()) {
    with_output(opts.report,
                [&](std::ostream& out) { write_report_json(rep, out); });
  }
  if (!opts.word_lists.empty()) {
    with_output(opts.word_lists, [&](std::ostream& out) {
      write_word_lists(run.word_lists, out);
    });
  }
  std::cout << format_report_table(rep);
  std::cout.flush();
  print_summary(run);
  return 0;
}

int run_lexicon(const std::string& lexicon, const std::string& output) {
  const EmojiLexicon lex = load_or_builtin(lexicon);
  with_output(output, [&](std::ostream& out) { write_lexicon(lex, out); });
  return 0;
}

int run_gen(GenOptions& opts) {
  if (!opts.priors.empty()) {
    for (std::size_t i = 0; i < kNumSentiments; ++i) {
      opts.config.class_priors[i] = opts.priors[i];
    }
  }
  const Corpus corpus = generate(opts.config);
  with_output(opts.output,
              [&](std::ostream& out) { write_corpus(corpus, out); });
  std::cerr << "generated " << corpus.size() << " tweets (seed "
            << opts.config.seed << ")\n";
  return 0;
}

void add_common_flags(CLI::App* cmd, LabelOptions& opts) {
  const std::map<std::string, CorpusFormat> formats{
      {"jsonl", CorpusFormat::Jsonl}, {"csv", CorpusFormat::Csv}};
  const std::map<std::string, FallbackPolicy> fallbacks{
      {"neutral", FallbackPolicy::Neutral},
      {"none", FallbackPolicy::None},
      {"majority-class", FallbackPolicy::MajorityClass}};
  const std::map<std::string, CoverageMode> coverages{
      {"occurrences", CoverageMode::Occurrences},
      {"types", CoverageMode::Types}};

  cmd->add_option("-i,--input", opts.input, "corpus file")->required();
  cmd->add_option("-f,--format", opts.format, "corpus format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("jsonl");
  cmd->add_option("--lexicon", opts.lexicon, "emoji lexicon file")
      ->envname("EMOLABEL_LEXICON");
  cmd->add_option("--fallback", opts.config.fallback,
                  "label for undecidable tweets")
      ->transform(CLI::CheckedTransformer(fallbacks, CLI::ignore_case))
      ->default_str("neutral");
  cmd->add_option("--coverage", opts.config.coverage_mode,
                  "count token occurrences or distinct types")
      ->transform(CLI::CheckedTransformer(coverages, CLI::ignore_case))
      ->default_str("occurrences");
  cmd->add_option("--word-lists", opts.word_lists,
                  "export induced word lists to this file");
  cmd->add_flag("--serial", opts.serial, "single-threaded reference path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "emolabel: distant-supervision sentiment labelling. Tweets with a "
      "majority of one class's emojis are labelled first; word lists "
      "induced from them label the rest by coverage."};
  app.require_subcommand(1);

  LabelOptions label_opts;
  auto* label_cmd =
      app.add_subcommand("label", "label a corpus, write JSONL results");
  add_common_flags(label_cmd, label_opts);
  label_cmd->add_option("-o,--output", label_opts.output,
                        "labelled JSONL (default standard output)");

  LabelOptions eval_opts;
  auto* eval_cmd = app.add_subcommand(
      "eval", "label a gold corpus and report accuracy and macro-F1");
  add_common_flags(eval_cmd, eval_opts);
  eval_cmd->add_option("-o,--output", eval_opts.output,
                       "also write labelled JSONL here");
  eval_cmd->add_option("--report", eval_opts.report,
                       "write the JSON report to this file");

  std::string lexicon_path;
  std::string lexicon_out;
  auto* lexicon_cmd =
      app.add_subcommand("lexicon", "export the active emoji lexicon");
  lexicon_cmd->add_option("--lexicon", lexicon_path, "emoji lexicon file")
      ->envname("EMOLABEL_LEXICON");
  lexicon_cmd->add_option("-o,--output", lexicon_out,
                          "output file (default standard output)");

  GenOptions gen_opts;
  auto* gen_cmd =
      app.add_subcommand("gen", "generate a synthetic gold-labelled corpus");
  gen_cmd->add_option("-n,--n", gen_opts.config.n_tweets, "number of tweets")
      ->check(CLI::PositiveNumber)
      ->default_str("1000");
  gen_cmd->add_option("--seed", gen_opts.config.seed, "generator seed")
      ->default_str("42");
  gen_cmd
      ->add_option("--emoji-density", gen_opts.config.emoji_density,
                   "fraction of tweets given class emojis")
      ->check(CLI::Range(0.0, 1.0))
      ->default_str("0.6");
  gen_cmd
      ->add_option("--noise", gen_opts.config.noise,
                   "fraction of tweets given off-class words")
      ->check(CLI::Range(0.0, 1.0))
      ->default_str("0");
  gen_cmd->add_option("--vocab-per-class", gen_opts.config.vocab_per_class,
                      "planted words per class")
      ->default_str("200");
  gen_cmd->add_option("--shared-vocab", gen_opts.config.shared_vocab,
                      "class-neutral words")
      ->default_str("20");
  gen_cmd
      ->add_option("--priors", gen_opts.priors,
                   "class priors: negative neutral positive")
      ->expected(3)
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-o,--output", gen_opts.output,
                      "corpus JSONL (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(label_cmd)) return run_label(label_opts);
    if (app.got_subcommand(eval_cmd)) return run_eval(eval_opts);
    if (app.got_subcommand(lexicon_cmd)) {
      return run_lexicon(lexicon_path, lexicon_out);
    }
    return run_gen(gen_opts);
  } catch (const SynthError& e) {
    std::cerr << "emolabel: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "emolabel: " << e.what() << '\n';
    return 1;
  }
}
