#include <benchmark/benchmark.h>

#include <variant>
#include <vector>

#include "wvkit/random.hpp"
#include "wvkit/wvcnn.hpp"

namespace {

struct Fixture {
  wvkit::CnnModel model;
  std::vector<wvkit::WordId> ids;
  wvkit::Tensor conv_input;

  explicit Fixture(std::size_t channels) {
    const std::size_t vocab = 5000, dim = 100, length = 32;
    wvkit::Rng rng(3);
    wvkit::Matrix embeddings(vocab, dim);
    for (double& v : embeddings.values()) v = rng.uniform(-0.5, 0.5);
    wvkit::WvcnnOptions options;
    options.sequence_length = length;
    options.channels = channels;
    model = wvkit::CnnModel::make(embeddings, 4, options, 5);
    for (std::size_t i = 0; i < length; ++i) {
      ids.push_back(static_cast<wvkit::WordId>(rng.below(vocab)));
    }
    conv_input = wvkit::Tensor({length, dim});
    for (double& v : conv_input.values()) v = rng.uniform(-0.5, 0.5);
  }

  const wvkit::Conv1DLayer& conv() const {
    return std::get<wvkit::Conv1DLayer>(model.layers()[1]);
  }
};

void BM_Conv1DForward(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wvkit::conv1d_forward(f.conv_input, f.conv()));
}
BENCHMARK(BM_Conv1DForward)->Arg(16)->Arg(64);

void BM_Conv1DBackward(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  const auto out = wvkit::conv1d_forward(f.conv_input, f.conv());
  wvkit::Tensor grad_out(out.shape(), 1.0);
  wvkit::Tensor grad_w(f.conv().weights.shape());
  wvkit::Tensor grad_b(f.conv().bias.shape());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wvkit::conv1d_backward(f.conv_input, out, grad_out, f.conv(), grad_w, grad_b));
  }
}
BENCHMARK(BM_Conv1DBackward)->Arg(16)->Arg(64);

void BM_ModelForwardBackward(benchmark::State& state) {
  const Fixture f(16);
  wvkit::Rng rng(7);
  wvkit::ForwardCache cache;
  auto grads = f.model.zero_gradients();
  for (auto _ : state) {
    f.model.forward(f.ids, 1, &rng, cache);
    f.model.accumulate_gradients(cache, 1, grads);
  }
}
BENCHMARK(BM_ModelForwardBackward);

}  // namespace
