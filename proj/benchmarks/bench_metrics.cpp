#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "wvkit/caption_metrics.hpp"
#include "wvkit/random.hpp"

namespace {

std::vector<wvkit::CaptionRecord> random_records(std::size_t count) {
  wvkit::Rng rng(11);
  auto caption = [&rng] {
    wvkit::Tokens t(8 + rng.below(8));
    for (auto& w : t) w = "w" + std::to_string(rng.below(300));
    return t;
  };
  std::vector<wvkit::CaptionRecord> records(count);
  for (std::size_t i = 0; i < count; ++i) {
    records[i].image_id = std::to_string(i);
    for (int r = 0; r < 5; ++r) records[i].references.push_back(caption());
    records[i].candidate = caption();
  }
  return records;
}

void BM_Bleu4(benchmark::State& state) {
  const auto records = random_records(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wvkit::bleu(records, 4));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Bleu4)->Arg(100)->Arg(1000);

void BM_Cider(benchmark::State& state) {
  const auto records = random_records(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wvkit::cider(records));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Cider)->Arg(100)->Arg(1000);

}  // namespace
