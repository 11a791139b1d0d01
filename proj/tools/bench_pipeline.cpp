// Copyright 2026 The Emolabel Authors
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0
// SPDX-License-Identifier: Apache-2.0

// Compares the serial reference path with the OpenMP path on a
// 7000-tweet synthetic corpus. The two must produce identical labels;
// only the wall time may differ.

#include <benchmark/benchmark.h>

#include "emolabel/emoji_lexicon.hpp"
#include "emolabel/pipeline.hpp"
#include "emolabel/synth.hpp"

namespace {

using namespace emolabel;

const Corpus& bench_corpus() {
  static const Corpus corpus = [] {
    SynthConfig config;
    config.n_tweets = 7000;
    config.noise = 0.05;
    config.seed = 1234;
    return generate(config);
  }();
  return corpus;
}

const EmojiLexicon& bench_lexicon() {
  static const EmojiLexicon lex = EmojiLexicon::builtin();
  return lex;
}

void BM_Step1(benchmark::State& state, Execution exec) {
  const Corpus& corpus = bench_corpus();
  for (auto _ : state) {
    Step1Result result = step1_emojis(corpus, bench_lexicon(), exec);
    benchmark::DoNotOptimize(result.labelled.data());
  }
  state.SetItemsProcessed(state.iterations() * corpus.size());
}

void BM_Pipeline(benchmark::State& state, Execution exec) {
  const Corpus& corpus = bench_corpus();
  for (auto _ : state) {
    LabelRun run = run_pipeline(corpus, bench_lexicon(), {}, exec);
    benchmark::DoNotOptimize(run.results.data());
  }
  state.SetItemsProcessed(state.iterations() * corpus.size());
}

BENCHMARK_CAPTURE(BM_Step1, serial, Execution::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Step1, parallel, Execution::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pipeline, serial, Execution::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pipeline, parallel, Execution::Parallel)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
