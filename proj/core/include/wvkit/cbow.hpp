#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wvkit/corpus.hpp"
#include "wvkit/huffman.hpp"
#include "wvkit/matrix.hpp"

namespace wvkit {

struct TrainingConfig {
  std::size_t dim = 100;
  std::size_t half_window = 5;
  double kappa0 = 0.025;
  /// Learning-rate multiplier applied once per epoch.
  double decay = 0.85;
  /// Work-grouping granularity; parameters are still updated per sample.
  std::size_t batch = 64;
  std::size_t epochs = 5;
  std::uint64_t min_count = 5;
  std::uint64_t seed = 1;
  bool deterministic = true;
  /// Worker count for the lock-free parallel mode. Ignored when deterministic.
  std::size_t threads = 1;

  /// Throws DomainError on a non-positive size, kappa0 <= 0 or decay
  /// outside (0, 1].
  void validate() const;
};

/// Embeddings (one row per word) and internal-node parameters (one row per
/// Huffman internal node), plus the learning rate of the current epoch.
struct TrainerState {
  Matrix embeddings;
  Matrix node_params;
  double kappa = 0.0;
  std::size_t epoch = 0;
};

/// Sum of context-word embeddings (not the mean).
using ProjectionVector = std::vector<double>;

/// Embeddings uniform in [-0.5/dim, 0.5/dim] drawn row-major from Rng(seed);
/// node parameters zero.
TrainerState init_state(std::size_t vocab_size, std::size_t dim,
                        std::uint64_t seed, double kappa);

/// Throws DomainError on an empty context or an id outside the matrix.
ProjectionVector project(std::span<const WordId> context,
                         const Matrix& embeddings);

/// Logistic function with the argument clamped to [-30, 30].
double sigmoid(double x);

double dot(std::span<const double> a, std::span<const double> b);

/// sigmoid(u.beta) for bit 0, its complement for bit 1.
double branch_prob(std::span<const double> projection,
                   std::span<const double> node, int bit);

/// Product of branch probabilities along the word's Huffman path; 1 when the
/// vocabulary has a single word.
double word_prob(const HuffmanTree& tree, const TrainerState& state,
                 std::span<const double> projection, WordId word);

/// log(branch_prob), evaluated through log1p so it stays accurate near 0.
double node_objective(std::span<const double> projection,
                      std::span<const double> node, int bit);

/// Sum over samples of log word_prob (the quantity training ascends).
double log_likelihood(std::span<const ContextSample> samples,
                      const HuffmanTree& tree, const TrainerState& state);

/// d node_objective / d node = (1 - bit - sigmoid(u.beta)) * u.
std::vector<double> grad_beta(std::span<const double> projection,
                              std::span<const double> node, int bit);

/// d node_objective / d u = (1 - bit - sigmoid(u.beta)) * beta.
std::vector<double> grad_projection(std::span<const double> projection,
                                    std::span<const double> node, int bit);

/// One stochastic gradient-ascent update for a single sample.
///
/// The projection gradient is accumulated from the node parameters as they
/// were before this step; each path node then moves by kappa * grad_beta and
/// every context word's embedding by kappa times the accumulated gradient.
/// Returns the sample's log-likelihood before the update.
double sgd_step(const ContextSample& sample, const HuffmanTree& tree,
                TrainerState& state);

struct EpochLog {
  std::size_t epoch = 0;
  double kappa = 0.0;
  /// Mean negative log-likelihood over the epoch's samples, each measured
  /// just before its own update.
  double mean_nll = 0.0;
};

struct TrainingResult {
  TrainerState state;
  std::vector<EpochLog> log;
};

/// Full training run. Epoch e uses kappa0 * decay^e (by repeated
/// multiplication) and a fresh shuffle from the seeded generator.
///
/// In deterministic mode a single worker applies every update and the result
/// is bit-reproducible for a seed. Otherwise config.threads workers pull
/// batches and update the shared matrices through relaxed atomic loads and
/// stores; lost updates between workers are accepted, torn values are not.
///
/// Throws DomainError when samples are empty, the tree does not match the
/// vocabulary, a sample references an unknown id, or the parameters stop
/// being finite.
TrainingResult train(std::span<const ContextSample> samples,
                     const Vocabulary& vocab, const HuffmanTree& tree,
                     const TrainingConfig& config);

struct Neighbor {
  WordId word = 0;
  double cosine = 0.0;
};

/// Cosine similarity; 0 when either vector is all zeros.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// The k most similar rows to `word` (itself excluded), by descending cosine
/// with ties broken by id. Throws DomainError when word is out of range or
/// k >= rows.
std::vector<Neighbor> nearest_neighbors(const Matrix& embeddings, WordId word,
                                        std::size_t k);

}  // namespace wvkit
