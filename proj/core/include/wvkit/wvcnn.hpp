#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wvkit/corpus.hpp"
#include "wvkit/embeddings_io.hpp"
#include "wvkit/matrix.hpp"
#include "wvkit/random.hpp"
#include "wvkit/tensor.hpp"

namespace wvkit {

// Layers of the word-vector CNN:
//   Embedding -> Conv1D (ReLU) -> Dropout -> MaxPool1D -> Flatten -> Dense
//   -> SoftmaxOutput
// Activations are (time x channels) matrices until Flatten.

/// Lookup table, vocab_size x dim. Id vocab_size is the pad id and embeds to
/// zeros.
struct EmbeddingLayer {
  std::size_t vocab_size = 0;
  std::size_t dim = 0;
  bool frozen = false;
  Tensor weights;

  friend bool operator==(const EmbeddingLayer&, const EmbeddingLayer&) = default;
};

/// Valid cross-correlation, stride 1, followed by ReLU. Weights are
/// out_channels x kernel x in_channels.
struct Conv1DLayer {
  std::size_t kernel = 0;
  std::size_t in_channels = 0;
  std::size_t out_channels = 0;
  Tensor weights;
  Tensor bias;

  friend bool operator==(const Conv1DLayer&, const Conv1DLayer&) = default;
};

/// Inverted dropout; identity at inference.
struct DropoutLayer {
  double rate = 0.0;

  friend bool operator==(const DropoutLayer&, const DropoutLayer&) = default;
};

/// Non-overlapping windows; a trailing remainder shorter than width is
/// dropped.
struct MaxPool1DLayer {
  std::size_t width = 0;

  friend bool operator==(const MaxPool1DLayer&, const MaxPool1DLayer&) = default;
};

struct FlattenLayer {
  friend bool operator==(const FlattenLayer&, const FlattenLayer&) = default;
};

/// Affine map, weights out x in.
struct DenseLayer {
  std::size_t in = 0;
  std::size_t out = 0;
  Tensor weights;
  Tensor bias;

  friend bool operator==(const DenseLayer&, const DenseLayer&) = default;
};

/// Softmax over the preceding Dense logits, scored by cross-entropy.
struct SoftmaxOutputLayer {
  std::size_t classes = 0;

  friend bool operator==(const SoftmaxOutputLayer&, const SoftmaxOutputLayer&) = default;
};

using Layer = std::variant<EmbeddingLayer, Conv1DLayer, DropoutLayer,
                           MaxPool1DLayer, FlattenLayer, DenseLayer,
                           SoftmaxOutputLayer>;

/// Token ids padded or truncated on the right to the model's sequence length.
struct LabeledSequence {
  std::vector<WordId> ids;
  std::size_t label = 0;
};

// ---------------------------------------------------------------------------
// Per-layer forward and backward passes.

/// Row i is the embedding of ids[i]; the pad id (vocab_size) gives zeros.
/// Throws DomainError for any other id >= vocab_size.
Tensor embed_lookup(std::span<const WordId> ids, const EmbeddingLayer& layer);

/// Adds each row of grad_output into the matching row of grad_weights.
/// Pad positions are skipped.
void embed_backward(std::span<const WordId> ids, const Tensor& grad_output,
                    const EmbeddingLayer& layer, Tensor& grad_weights);

/// Returns ReLU(conv). Throws DomainError when the input is shorter than the
/// kernel or its channel count differs from the layer.
Tensor conv1d_forward(const Tensor& input, const Conv1DLayer& layer);

/// Back-propagates through ReLU (gated on output > 0) and the convolution.
/// Accumulates into grad_weights and grad_bias, returns the input gradient.
Tensor conv1d_backward(const Tensor& input, const Tensor& output,
                       const Tensor& grad_output, const Conv1DLayer& layer,
                       Tensor& grad_weights, Tensor& grad_bias);

struct DropoutResult {
  Tensor output;
  /// Per-element multiplier: 0 for dropped, 1/(1-rate) for kept. All ones at
  /// inference.
  std::vector<double> mask;
};

/// One Bernoulli draw per element, in row-major order, from rng. rng is not
/// touched when training is false. Throws DomainError unless 0 <= rate < 1.
DropoutResult dropout_forward(const Tensor& input, double rate, bool training,
                              Rng& rng);

Tensor dropout_backward(const Tensor& grad_output, std::span<const double> mask);

struct PoolResult {
  Tensor output;
  /// Flat input index of each output element's maximum; earliest wins ties.
  std::vector<std::size_t> argmax;
};

/// Throws DomainError when the input has fewer rows than the window.
PoolResult maxpool1d_forward(const Tensor& input, std::size_t width);

Tensor maxpool1d_backward(const Tensor& grad_output,
                          std::span<const std::size_t> argmax,
                          const std::vector<std::size_t>& input_shape);

/// Logits = W x + b.
Tensor dense_forward(const Tensor& input, const DenseLayer& layer);

/// Accumulates into grad_weights and grad_bias, returns the input gradient.
Tensor dense_backward(const Tensor& input, const Tensor& grad_output,
                      const DenseLayer& layer, Tensor& grad_weights,
                      Tensor& grad_bias);

/// Max-subtracted softmax.
std::vector<double> softmax(std::span<const double> logits);

struct SoftmaxResult {
  std::vector<double> probabilities;
  double loss = 0.0;
};

/// Dense layer followed by softmax and cross-entropy against label. Throws
/// DomainError for label >= classes or an input of the wrong length.
SoftmaxResult dense_softmax_forward(const Tensor& input,
                                    const DenseLayer& layer,
                                    std::size_t label);

// ---------------------------------------------------------------------------
// Whole model.

struct LayerCache {
  Tensor input;
  Tensor output;
  std::vector<double> dropout_mask;
  std::vector<std::size_t> pool_argmax;
};

/// Everything the backward pass needs from one forward pass.
struct ForwardCache {
  std::vector<WordId> ids;
  std::vector<LayerCache> layers;
  std::vector<double> probabilities;
  double loss = 0.0;
  bool valid = false;
};

/// Gradients aligned with CnnModel::parameters(), plus the gradient with
/// respect to the embedded input sequence (sequence_length x dim).
struct ModelGradients {
  std::vector<Tensor> params;
  Tensor input;
};

struct ParameterRef {
  Tensor* tensor = nullptr;
  bool trainable = true;
  std::string name;
};

struct WvcnnOptions {
  std::size_t sequence_length = 32;
  std::size_t kernel = 3;
  std::size_t channels = 16;
  double dropout = 0.5;
  std::size_t pool = 2;
  bool freeze_embeddings = false;
};

class CnnModel {
 public:
  CnnModel() = default;
  /// Throws DomainError when the stack is malformed (see validate()).
  CnnModel(std::vector<Layer> layers, std::size_t sequence_length,
           std::uint64_t seed);

  /// Embedding (initialized from `embeddings`) -> Conv1D -> Dropout ->
  /// MaxPool1D -> Flatten -> Dense -> SoftmaxOutput. Conv weights are
  /// He-uniform, dense weights Glorot-uniform, biases zero; all drawn from
  /// Rng(seed).
  static CnnModel make(const Matrix& embeddings, std::size_t classes,
                       const WvcnnOptions& options, std::uint64_t seed);

  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t sequence_length() const { return sequence_length_; }
  std::size_t vocab_size() const;
  std::size_t embedding_dim() const;
  std::size_t classes() const;
  WordId pad_id() const { return static_cast<WordId>(vocab_size()); }
  std::uint64_t seed() const { return seed_; }

  /// Parameter tensors in layer order (embedding, conv weights and bias,
  /// dense weights and bias). Frozen embeddings are listed as untrainable.
  std::vector<ParameterRef> parameters();
  std::vector<const Tensor*> parameters() const;

  /// Checks layer order and shape compatibility: Embedding first, exactly
  /// one SoftmaxOutput, last, directly after a Dense; every Dropout sits
  /// between a Conv1D and a MaxPool1D; all shapes agree for sequence_length.
  void validate() const;

  /// Forward pass. Dropout is active only when dropout_rng is non-null.
  /// Throws DomainError for a wrong-length sequence, a bad id or a label out
  /// of range.
  double forward(std::span<const WordId> ids, std::size_t label,
                 Rng* dropout_rng, ForwardCache& cache) const;

  /// Dropout-free class probabilities.
  std::vector<double> predict(std::span<const WordId> ids) const;
  std::size_t classify(std::span<const WordId> ids) const;

  /// Exact reverse-mode gradients of the cross-entropy loss recorded in
  /// cache. Throws DomainError if the cache is missing or stale.
  ModelGradients backward(const ForwardCache& cache, std::size_t label) const;

  /// Zero gradients shaped like parameters(), input gradient included.
  ModelGradients zero_gradients() const;

  /// Like backward() but adds into grads, which must come from
  /// zero_gradients(). Frozen embeddings receive nothing.
  void accumulate_gradients(const ForwardCache& cache, std::size_t label,
                            ModelGradients& grads) const;

  friend bool operator==(const CnnModel&, const CnnModel&) = default;

 private:
  std::vector<Layer> layers_;
  std::size_t sequence_length_ = 0;
  std::uint64_t seed_ = 0;
};

/// Maps tokens to ids (unknown tokens removed), then pads with pad_id or
/// truncates on the right to length.
std::vector<WordId> make_sequence(std::span<const std::string> tokens,
                                  const EmbeddingTable& table,
                                  std::size_t length, WordId pad_id);

struct ClassifierConfig {
  std::size_t epochs = 10;
  std::size_t batch = 64;
  double kappa0 = 0.05;
  double decay = 0.85;
  std::uint64_t seed = 1;
};

struct ClassifierEpochLog {
  std::size_t epoch = 0;
  double kappa = 0.0;
  double mean_loss = 0.0;
  /// Dropout-free accuracy on the training set after the epoch.
  double train_accuracy = 0.0;
};

/// Fraction of sequences whose dropout-free prediction equals the label.
double accuracy(const CnnModel& model, std::span<const LabeledSequence> data);

/// Mini-batch gradient descent on mean cross-entropy with per-epoch decay
/// kappa0 * decay^e. Shuffling and dropout masks come from generators derived
/// from config.seed, so a fixed seed gives identical parameters.
std::vector<ClassifierEpochLog> train_classifier(
    std::span<const LabeledSequence> data, CnnModel& model,
    const ClassifierConfig& config);

struct LabeledText {
  std::size_t label = 0;
  std::vector<std::string> tokens;
};

/// `<label>\t<sentence>` per line; the sentence is tokenized. Blank lines are
/// skipped. Throws IoError on unreadable files or lines without a numeric
/// label.
std::vector<LabeledText> read_labeled_dataset(const std::filesystem::path& path);

}  // namespace wvkit
