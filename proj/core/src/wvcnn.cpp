#include "wvkit/wvcnn.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "wvkit/error.hpp"

namespace wvkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_rank(const Tensor& t, std::size_t rank, const char* what) {
  if (t.rank() != rank) {
    throw DomainError(fmt::format("{} expects a rank-{} tensor, got shape {}",
                                  what, rank, t.shape()));
  }
}

Tensor zeros_like(const Tensor& t) { return Tensor(t.shape(), 0.0); }

}  // namespace

// ---------------------------------------------------------------------------
// Embedding

Tensor embed_lookup(std::span<const WordId> ids, const EmbeddingLayer& layer) {
  Tensor out({ids.size(), layer.dim});
  for (std::size_t t = 0; t < ids.size(); ++t) {
    const WordId id = ids[t];
    if (id == layer.vocab_size) continue;
    if (id > layer.vocab_size) {
      throw DomainError(fmt::format("token id {} out of range (V = {})", id,
                                    layer.vocab_size));
    }
    for (std::size_t k = 0; k < layer.dim; ++k) {
      out(t, k) = layer.weights(id, k);
    }
  }
  return out;
}

void embed_backward(std::span<const WordId> ids, const Tensor& grad_output,
                    const EmbeddingLayer& layer, Tensor& grad_weights) {
  for (std::size_t t = 0; t < ids.size(); ++t) {
    const WordId id = ids[t];
    if (id >= layer.vocab_size) continue;
    for (std::size_t k = 0; k < layer.dim; ++k) {
      grad_weights(id, k) += grad_output(t, k);
    }
  }
}

// ---------------------------------------------------------------------------
// Conv1D + ReLU

Tensor conv1d_forward(const Tensor& input, const Conv1DLayer& layer) {
  require_rank(input, 2, "conv1d");
  const std::size_t steps = input.dim(0);
  if (input.dim(1) != layer.in_channels) {
    throw DomainError(fmt::format("conv1d expects {} input channels, got {}",
                                  layer.in_channels, input.dim(1)));
  }
  if (steps < layer.kernel) {
    throw DomainError(fmt::format(
        "conv1d input length {} shorter than kernel {}", steps, layer.kernel));
  }
  const std::size_t out_steps = steps - layer.kernel + 1;
  Tensor out({out_steps, layer.out_channels});
  for (std::size_t t = 0; t < out_steps; ++t) {
    for (std::size_t o = 0; o < layer.out_channels; ++o) {
      double acc = layer.bias[o];
      for (std::size_t j = 0; j < layer.kernel; ++j) {
        for (std::size_t i = 0; i < layer.in_channels; ++i) {
          acc += layer.weights(o, j, i) * input(t + j, i);
        }
      }
      out(t, o) = acc > 0.0 ? acc : 0.0;
    }
  }
  return out;
}

Tensor conv1d_backward(const Tensor& input, const Tensor& output,
                       const Tensor& grad_output, const Conv1DLayer& layer,
                       Tensor& grad_weights, Tensor& grad_bias) {
  Tensor grad_input = zeros_like(input);
  const std::size_t out_steps = output.dim(0);
  for (std::size_t t = 0; t < out_steps; ++t) {
    for (std::size_t o = 0; o < layer.out_channels; ++o) {
      if (!(output(t, o) > 0.0)) continue;
      const double g = grad_output(t, o);
      grad_bias[o] += g;
      for (std::size_t j = 0; j < layer.kernel; ++j) {
        for (std::size_t i = 0; i < layer.in_channels; ++i) {
          grad_weights(o, j, i) += g * input(t + j, i);
          grad_input(t + j, i) += g * layer.weights(o, j, i);
        }
      }
    }
  }
  return grad_input;
}

// ---------------------------------------------------------------------------
// Dropout

DropoutResult dropout_forward(const Tensor& input, double rate, bool training,
                              Rng& rng) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw DomainError(fmt::format("dropout rate {} not in [0, 1)", rate));
  }
  DropoutResult result{input, std::vector<double>(input.size(), 1.0)};
  if (!training || rate == 0.0) return result;
  const double keep_scale = 1.0 / (1.0 - rate);
  for (std::size_t i = 0; i < input.size(); ++i) {
    result.mask[i] = rng.bernoulli(rate) ? 0.0 : keep_scale;
    result.output[i] = input[i] * result.mask[i];
  }
  return result;
}

Tensor dropout_backward(const Tensor& grad_output,
                        std::span<const double> mask) {
  Tensor grad = grad_output;
  if (mask.empty()) return grad;
  for (std::size_t i = 0; i < grad.size(); ++i) grad[i] *= mask[i];
  return grad;
}

// ---------------------------------------------------------------------------
// MaxPool1D

PoolResult maxpool1d_forward(const Tensor& input, std::size_t width) {
  require_rank(input, 2, "maxpool1d");
  if (width == 0) throw DomainError("pool width must be positive");
  const std::size_t steps = input.dim(0);
  const std::size_t channels = input.dim(1);
  if (steps < width) {
    throw DomainError(fmt::format("maxpool1d input length {} shorter than {}",
                                  steps, width));
  }
  const std::size_t out_steps = steps / width;
  PoolResult result{Tensor({out_steps, channels}),
                    std::vector<std::size_t>(out_steps * channels)};
  for (std::size_t p = 0; p < out_steps; ++p) {
    for (std::size_t c = 0; c < channels; ++c) {
      std::size_t best = p * width;
      for (std::size_t t = p * width + 1; t < (p + 1) * width; ++t) {
        if (input(t, c) > input(best, c)) best = t;
      }
      result.output(p, c) = input(best, c);
      result.argmax[p * channels + c] = best * channels + c;
    }
  }
  return result;
}

Tensor maxpool1d_backward(const Tensor& grad_output,
                          std::span<const std::size_t> argmax,
                          const std::vector<std::size_t>& input_shape) {
  Tensor grad(input_shape);
  for (std::size_t i = 0; i < grad_output.size(); ++i) {
    grad[argmax[i]] += grad_output[i];
  }
  return grad;
}

// ---------------------------------------------------------------------------
// Dense + softmax

Tensor dense_forward(const Tensor& input, const DenseLayer& layer) {
  if (input.size() != layer.in) {
    throw DomainError(fmt::format("dense expects {} inputs, got {}", layer.in,
                                  input.size()));
  }
  Tensor out({layer.out});
  for (std::size_t o = 0; o < layer.out; ++o) {
    double acc = layer.bias[o];
    for (std::size_t i = 0; i < layer.in; ++i) {
      acc += layer.weights(o, i) * input[i];
    }
    out[o] = acc;
  }
  return out;
}

Tensor dense_backward(const Tensor& input, const Tensor& grad_output,
                      const DenseLayer& layer, Tensor& grad_weights,
                      Tensor& grad_bias) {
  Tensor grad_input = zeros_like(input);
  for (std::size_t o = 0; o < layer.out; ++o) {
    const double g = grad_output[o];
    grad_bias[o] += g;
    for (std::size_t i = 0; i < layer.in; ++i) {
      grad_weights(o, i) += g * input[i];
      grad_input[i] += g * layer.weights(o, i);
    }
  }
  return grad_input;
}

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> p(logits.begin(), logits.end());
  if (p.empty()) return p;
  const double top = *std::max_element(p.begin(), p.end());
  double sum = 0.0;
  for (double& v : p) {
    v = std::exp(v - top);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

namespace {

// -log softmax(logits)[label], computed in log space.
double cross_entropy(std::span<const double> logits, std::size_t label) {
  const double top = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double v : logits) sum += std::exp(v - top);
  return -(logits[label] - top - std::log(sum));
}

void require_label(std::size_t label, std::size_t classes) {
  if (label >= classes) {
    throw DomainError(
        fmt::format("label {} out of range ({} classes)", label, classes));
  }
}

}  // namespace

SoftmaxResult dense_softmax_forward(const Tensor& input,
                                    const DenseLayer& layer,
                                    std::size_t label) {
  require_label(label, layer.out);
  const Tensor logits = dense_forward(input, layer);
  return {softmax(logits.values()), cross_entropy(logits.values(), label)};
}

// ---------------------------------------------------------------------------
// CnnModel

CnnModel::CnnModel(std::vector<Layer> layers, std::size_t sequence_length,
                   std::uint64_t seed)
    : layers_(std::move(layers)),
      sequence_length_(sequence_length),
      seed_(seed) {
  validate();
}

CnnModel CnnModel::make(const Matrix& embeddings, std::size_t classes,
                        const WvcnnOptions& options, std::uint64_t seed) {
  if (embeddings.rows() == 0 || embeddings.cols() == 0) {
    throw DomainError("embedding matrix is empty");
  }
  if (classes < 2) throw DomainError("classifier needs at least two classes");
  if (options.kernel == 0 || options.channels == 0 || options.pool == 0) {
    throw DomainError("kernel, channels and pool must be positive");
  }
  if (options.sequence_length < options.kernel + options.pool - 1) {
    throw DomainError(fmt::format(
        "sequence length {} too short for kernel {} and pool {}",
        options.sequence_length, options.kernel, options.pool));
  }
  const std::size_t vocab = embeddings.rows();
  const std::size_t dim = embeddings.cols();
  Rng rng(seed);

  EmbeddingLayer embedding{vocab, dim, options.freeze_embeddings,
                           Tensor({vocab, dim})};
  std::copy(embeddings.values().begin(), embeddings.values().end(),
            embedding.weights.values().begin());

  Conv1DLayer conv{options.kernel, dim, options.channels,
                   Tensor({options.channels, options.kernel, dim}),
                   Tensor({options.channels})};
  const double conv_limit =
      std::sqrt(6.0 / static_cast<double>(options.kernel * dim));
  for (double& w : conv.weights.values()) w = rng.uniform(-conv_limit, conv_limit);

  const std::size_t pooled =
      (options.sequence_length - options.kernel + 1) / options.pool;
  const std::size_t flat = pooled * options.channels;
  DenseLayer dense{flat, classes, Tensor({classes, flat}), Tensor({classes})};
  const double dense_limit =
      std::sqrt(6.0 / static_cast<double>(flat + classes));
  for (double& w : dense.weights.values()) {
    w = rng.uniform(-dense_limit, dense_limit);
  }

  std::vector<Layer> layers;
  layers.emplace_back(std::move(embedding));
  layers.emplace_back(std::move(conv));
  layers.emplace_back(DropoutLayer{options.dropout});
  layers.emplace_back(MaxPool1DLayer{options.pool});
  layers.emplace_back(FlattenLayer{});
  layers.emplace_back(std::move(dense));
  layers.emplace_back(SoftmaxOutputLayer{classes});
  return CnnModel(std::move(layers), options.sequence_length, seed);
}

std::size_t CnnModel::vocab_size() const {
  return std::get<EmbeddingLayer>(layers_.front()).vocab_size;
}

std::size_t CnnModel::embedding_dim() const {
  return std::get<EmbeddingLayer>(layers_.front()).dim;
}

std::size_t CnnModel::classes() const {
  return std::get<SoftmaxOutputLayer>(layers_.back()).classes;
}

std::vector<ParameterRef> CnnModel::parameters() {
  std::vector<ParameterRef> refs;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    std::visit(Overloaded{
                   [&](EmbeddingLayer& e) {
                     refs.push_back({&e.weights, !e.frozen,
                                     fmt::format("layer{}.embedding", l)});
                   },
                   [&](Conv1DLayer& c) {
                     refs.push_back({&c.weights, true,
                                     fmt::format("layer{}.conv.weights", l)});
                     refs.push_back({&c.bias, true,
                                     fmt::format("layer{}.conv.bias", l)});
                   },
                   [&](DenseLayer& d) {
                     refs.push_back({&d.weights, true,
                                     fmt::format("layer{}.dense.weights", l)});
                     refs.push_back({&d.bias, true,
                                     fmt::format("layer{}.dense.bias", l)});
                   },
                   [](auto&) {},
               },
               layers_[l]);
  }
  return refs;
}

std::vector<const Tensor*> CnnModel::parameters() const {
  std::vector<const Tensor*> out;
  for (auto& ref : const_cast<CnnModel*>(this)->parameters()) {
    out.push_back(ref.tensor);
  }
  return out;
}

void CnnModel::validate() const {
  if (layers_.empty()) throw DomainError("model has no layers");
  if (!std::holds_alternative<EmbeddingLayer>(layers_.front())) {
    throw DomainError("first layer must be an embedding");
  }
  if (!std::holds_alternative<SoftmaxOutputLayer>(layers_.back())) {
    throw DomainError("last layer must be the softmax output");
  }
  if (sequence_length_ == 0) throw DomainError("sequence length must be positive");

  std::vector<std::size_t> shape;  // running activation shape
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    auto fail = [&](const std::string& why) {
      throw DomainError(fmt::format("layer {}: {}", l, why));
    };
    std::visit(
        Overloaded{
            [&](const EmbeddingLayer& e) {
              if (l != 0) fail("embedding must be the first layer");
              if (e.vocab_size == 0 || e.dim == 0) fail("empty embedding");
              if (e.weights.shape() != std::vector<std::size_t>{e.vocab_size, e.dim}) {
                fail("embedding weights have the wrong shape");
              }
              shape = {sequence_length_, e.dim};
            },
            [&](const Conv1DLayer& c) {
              if (shape.size() != 2) fail("conv1d needs a sequence input");
              if (c.kernel == 0 || c.out_channels == 0) fail("empty conv1d");
              if (shape[1] != c.in_channels) fail("conv1d channel mismatch");
              if (shape[0] < c.kernel) fail("sequence shorter than kernel");
              if (c.weights.shape() !=
                      std::vector<std::size_t>{c.out_channels, c.kernel, c.in_channels} ||
                  c.bias.shape() != std::vector<std::size_t>{c.out_channels}) {
                fail("conv1d parameters have the wrong shape");
              }
              shape = {shape[0] - c.kernel + 1, c.out_channels};
            },
            [&](const DropoutLayer& d) {
              if (!(d.rate >= 0.0 && d.rate < 1.0)) fail("dropout rate not in [0, 1)");
              if (l == 0 || !std::holds_alternative<Conv1DLayer>(layers_[l - 1]) ||
                  l + 1 >= layers_.size() ||
                  !std::holds_alternative<MaxPool1DLayer>(layers_[l + 1])) {
                fail("dropout must sit between a conv1d and a maxpool1d");
              }
            },
            [&](const MaxPool1DLayer& p) {
              if (shape.size() != 2) fail("maxpool1d needs a sequence input");
              if (p.width == 0) fail("pool width must be positive");
              if (shape[0] < p.width) fail("sequence shorter than pool width");
              shape = {shape[0] / p.width, shape[1]};
            },
            [&](const FlattenLayer&) {
              shape = {std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                                       std::multiplies<>())};
            },
            [&](const DenseLayer& d) {
              if (shape.size() != 1) fail("dense needs a flattened input");
              if (shape[0] != d.in) fail("dense input size mismatch");
              if (d.out == 0) fail("empty dense layer");
              if (d.weights.shape() != std::vector<std::size_t>{d.out, d.in} ||
                  d.bias.shape() != std::vector<std::size_t>{d.out}) {
                fail("dense parameters have the wrong shape");
              }
              shape = {d.out};
            },
            [&](const SoftmaxOutputLayer& s) {
              if (l + 1 != layers_.size()) fail("softmax output must be last");
              if (l == 0 || !std::holds_alternative<DenseLayer>(layers_[l - 1])) {
                fail("softmax output must follow a dense layer");
              }
              if (shape != std::vector<std::size_t>{s.classes}) {
                fail("class count does not match the dense output");
              }
            },
        },
        layer);
  }
}

double CnnModel::forward(std::span<const WordId> ids, std::size_t label,
                         Rng* dropout_rng, ForwardCache& cache) const {
  if (ids.size() != sequence_length_) {
    throw DomainError(fmt::format("sequence has {} ids, model expects {}",
                                  ids.size(), sequence_length_));
  }
  require_label(label, classes());
  cache.valid = false;
  cache.ids.assign(ids.begin(), ids.end());
  cache.layers.resize(layers_.size());

  Tensor x;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    LayerCache& lc = cache.layers[l];
    lc.input = x;
    lc.dropout_mask.clear();
    lc.pool_argmax.clear();
    std::visit(Overloaded{
                   [&](const EmbeddingLayer& e) { x = embed_lookup(ids, e); },
                   [&](const Conv1DLayer& c) { x = conv1d_forward(x, c); },
                   [&](const DropoutLayer& d) {
                     if (dropout_rng == nullptr) return;
                     auto r = dropout_forward(x, d.rate, true, *dropout_rng);
                     x = std::move(r.output);
                     lc.dropout_mask = std::move(r.mask);
                   },
                   [&](const MaxPool1DLayer& p) {
                     auto r = maxpool1d_forward(x, p.width);
                     x = std::move(r.output);
                     lc.pool_argmax = std::move(r.argmax);
                   },
                   [&](const FlattenLayer&) { x = flatten(x); },
                   [&](const DenseLayer& d) { x = dense_forward(x, d); },
                   [&](const SoftmaxOutputLayer&) {
                     cache.loss = cross_entropy(x.values(), label);
                     cache.probabilities = softmax(x.values());
                   },
               },
               layers_[l]);
    lc.output = x;
  }
  cache.valid = true;
  return cache.loss;
}

std::vector<double> CnnModel::predict(std::span<const WordId> ids) const {
  ForwardCache cache;
  forward(ids, 0, nullptr, cache);
  return cache.probabilities;
}

std::size_t CnnModel::classify(std::span<const WordId> ids) const {
  const auto p = predict(ids);
  return static_cast<std::size_t>(std::max_element(p.begin(), p.end()) -
                                  p.begin());
}

ModelGradients CnnModel::zero_gradients() const {
  ModelGradients grads;
  for (const Tensor* t : parameters()) grads.params.push_back(zeros_like(*t));
  grads.input = Tensor({sequence_length_, embedding_dim()});
  return grads;
}

ModelGradients CnnModel::backward(const ForwardCache& cache,
                                  std::size_t label) const {
  ModelGradients grads = zero_gradients();
  accumulate_gradients(cache, label, grads);
  return grads;
}

void CnnModel::accumulate_gradients(const ForwardCache& cache,
                                    std::size_t label,
                                    ModelGradients& grads) const {
  if (!cache.valid || cache.layers.size() != layers_.size() ||
      cache.ids.size() != sequence_length_) {
    throw DomainError("backward pass needs a cached forward pass of this model");
  }
  require_label(label, classes());

  // Parameter slots are assigned in layer order, so walk them backwards.
  std::size_t slot = grads.params.size();
  Tensor grad;
  for (std::size_t l = layers_.size(); l-- > 0;) {
    const LayerCache& lc = cache.layers[l];
    std::visit(
        Overloaded{
            [&](const SoftmaxOutputLayer& s) {
              grad = Tensor({s.classes}, cache.probabilities);
              grad[label] -= 1.0;
            },
            [&](const DenseLayer& d) {
              slot -= 2;
              grad = dense_backward(lc.input, grad, d, grads.params[slot],
                                    grads.params[slot + 1]);
            },
            [&](const FlattenLayer&) { grad = grad.reshaped(lc.input.shape()); },
            [&](const MaxPool1DLayer&) {
              grad = maxpool1d_backward(grad, lc.pool_argmax, lc.input.shape());
            },
            [&](const DropoutLayer&) {
              grad = dropout_backward(grad, lc.dropout_mask);
            },
            [&](const Conv1DLayer& c) {
              slot -= 2;
              grad = conv1d_backward(lc.input, lc.output, grad, c,
                                     grads.params[slot], grads.params[slot + 1]);
            },
            [&](const EmbeddingLayer& e) {
              slot -= 1;
              for (std::size_t i = 0; i < grad.size(); ++i) {
                grads.input[i] += grad[i];
              }
              if (!e.frozen) {
                embed_backward(cache.ids, grad, e, grads.params[slot]);
              }
            },
        },
        layers_[l]);
  }
}

// ---------------------------------------------------------------------------
// Data and training

std::vector<WordId> make_sequence(std::span<const std::string> tokens,
                                  const EmbeddingTable& table,
                                  std::size_t length, WordId pad_id) {
  std::vector<WordId> ids;
  ids.reserve(length);
  for (const auto& token : tokens) {
    if (ids.size() == length) break;
    if (auto id = table.find(token)) ids.push_back(*id);
  }
  ids.resize(length, pad_id);
  return ids;
}

double accuracy(const CnnModel& model, std::span<const LabeledSequence> data) {
  if (data.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& s : data) {
    if (model.classify(s.ids) == s.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

std::vector<ClassifierEpochLog> train_classifier(
    std::span<const LabeledSequence> data, CnnModel& model,
    const ClassifierConfig& config) {
  if (data.empty()) throw DomainError("classifier dataset is empty");
  if (config.batch == 0 || config.epochs == 0) {
    throw DomainError("batch and epochs must be positive");
  }
  if (!(config.kappa0 > 0.0) || !(config.decay > 0.0 && config.decay <= 1.0)) {
    throw DomainError("learning rate must be positive and decay in (0, 1]");
  }
  model.validate();
  for (const auto& s : data) {
    if (s.ids.size() != model.sequence_length()) {
      throw DomainError(fmt::format("sequence of length {} (model expects {})",
                                    s.ids.size(), model.sequence_length()));
    }
    require_label(s.label, model.classes());
  }

  Rng shuffle_rng(Rng::derive_seed(config.seed, 1));
  Rng dropout_rng(Rng::derive_seed(config.seed, 2));
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  auto params = model.parameters();
  ModelGradients grads = model.zero_gradients();
  ForwardCache cache;
  std::vector<ClassifierEpochLog> log;

  double kappa = config.kappa0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    shuffle_rng.shuffle(std::span(order));
    double loss_sum = 0.0;
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch) {
      const std::size_t end = std::min(order.size(), begin + config.batch);
      for (auto& g : grads.params) g.fill(0.0);
      for (std::size_t i = begin; i < end; ++i) {
        const auto& sample = data[order[i]];
        loss_sum += model.forward(sample.ids, sample.label, &dropout_rng, cache);
        model.accumulate_gradients(cache, sample.label, grads);
      }
      const double step = kappa / static_cast<double>(end - begin);
      for (std::size_t p = 0; p < params.size(); ++p) {
        if (!params[p].trainable) continue;
        auto values = params[p].tensor->values();
        const auto g = grads.params[p].values();
        for (std::size_t k = 0; k < values.size(); ++k) values[k] -= step * g[k];
      }
    }
    for (const auto& p : params) {
      if (!p.tensor->all_finite()) {
        throw DomainError(fmt::format(
            "classifier training diverged in epoch {} ({})", epoch, p.name));
      }
    }
    log.push_back({epoch, kappa, loss_sum / static_cast<double>(data.size()),
                   accuracy(model, data)});
    kappa *= config.decay;
  }
  return log;
}

std::vector<LabeledText> read_labeled_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read dataset '{}'", path.string()));
  std::vector<LabeledText> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto tab = line.find('\t');
    std::size_t label = 0;
    const char* first = line.data();
    const char* last = line.data() + (tab == std::string::npos ? 0 : tab);
    auto [ptr, ec] = std::from_chars(first, last, label);
    if (tab == std::string::npos || ec != std::errc() || ptr != last) {
      throw IoError(fmt::format("{}:{}: expected '<label>\\t<sentence>'",
                                path.string(), line_no));
    }
    rows.push_back({label, tokenize(std::string_view(line).substr(tab + 1))});
  }
  return rows;
}

}  // namespace wvkit
