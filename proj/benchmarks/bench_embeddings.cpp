#include <benchmark/benchmark.h>

#include <vector>

#include "wvkit/cbow.hpp"
#include "wvkit/huffman.hpp"
#include "wvkit/random.hpp"

namespace {

std::vector<std::uint64_t> zipf_frequencies(std::size_t n) {
  std::vector<std::uint64_t> freqs(n);
  for (std::size_t i = 0; i < n; ++i) freqs[i] = 1 + 1000000 / (i + 1);
  return freqs;
}

void BM_HuffmanBuild(benchmark::State& state) {
  const auto freqs = zipf_frequencies(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto tree = wvkit::HuffmanTree::build(freqs);
    benchmark::DoNotOptimize(tree);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HuffmanBuild)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity();

void BM_SgdStep(benchmark::State& state) {
  const std::size_t vocab = 10000;
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto tree = wvkit::HuffmanTree::build(zipf_frequencies(vocab));
  auto params = wvkit::init_state(vocab, dim, 1, 0.025);
  wvkit::Rng rng(2);
  std::vector<wvkit::ContextSample> samples(1024);
  for (auto& s : samples) {
    s.center = static_cast<wvkit::WordId>(rng.below(vocab));
    for (int j = 0; j < 10; ++j) s.context.push_back(static_cast<wvkit::WordId>(rng.below(vocab)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wvkit::sgd_step(samples[i++ % samples.size()], tree, params));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_SgdStep)->Arg(32)->Arg(100)->Arg(300);

}  // namespace
