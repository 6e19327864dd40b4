#include <benchmark/benchmark.h>

#include <sstream>

#include "illusion/corpus.hpp"

using namespace illusion;

namespace {

FrequencyLexicon zipf_lexicon(std::size_t words) {
  std::ostringstream text;
  for (std::size_t i = 0; i < words; ++i) {
    text << "w" << i << ' ' << 1 + 1000000 / (i + 1) << '\n';
  }
  std::istringstream in(text.str());
  return FrequencyLexicon::parse(in);
}

}  // namespace

static void BM_SampleWithReplacement(benchmark::State& state) {
  const FrequencyLexicon lexicon = zipf_lexicon(10000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_words(lexicon, 200, 10000, false, 42));
  }
}
BENCHMARK(BM_SampleWithReplacement)->Unit(benchmark::kMillisecond);

static void BM_SampleUnique(benchmark::State& state) {
  const FrequencyLexicon lexicon = zipf_lexicon(10000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_words(lexicon, 200, 10000, true, 42));
  }
}
BENCHMARK(BM_SampleUnique)->Unit(benchmark::kMillisecond);

static void BM_LoadFrequencyList(benchmark::State& state) {
  std::ostringstream text;
  for (std::size_t i = 0; i < 36700; ++i) {
    text << "w" << i << ' ' << 1 + 1000000 / (i + 1) << '\n';
  }
  const std::string blob = text.str();
  for (auto _ : state) {
    std::istringstream in(blob);
    benchmark::DoNotOptimize(FrequencyLexicon::parse(in));
  }
}
BENCHMARK(BM_LoadFrequencyList)->Unit(benchmark::kMillisecond);
