#include "wvkit/cbow.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "wvkit/error.hpp"
#include "wvkit/random.hpp"

namespace wvkit {

namespace {

constexpr double kLogitClamp = 30.0;

double clamp_logit(double x) { return std::clamp(x, -kLogitClamp, kLogitClamp); }

void require_same_dim(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DomainError(
        fmt::format("dimension mismatch: {} vs {}", a.size(), b.size()));
  }
}

// Single-writer access: ordinary loads and stores.
struct PlainAccess {
  static double load(const double& x) { return x; }
  static void store(double& x, double v) { x = v; }
};

// Shared access for parallel workers. Whole-value relaxed atomics keep
// concurrent read-modify-write races well defined; lost updates are allowed.
struct RelaxedAccess {
  static_assert(std::atomic_ref<double>::is_always_lock_free);
  static double load(const double& x) {
    return std::atomic_ref<double>(const_cast<double&>(x))
        .load(std::memory_order_relaxed);
  }
  static void store(double& x, double v) {
    std::atomic_ref<double>(x).store(v, std::memory_order_relaxed);
  }
};

struct StepScratch {
  std::vector<double> projection;
  std::vector<double> accumulated;
};

template <typename Access>
double step_impl(const ContextSample& sample, const HuffmanTree& tree,
                 Matrix& embeddings, Matrix& node_params, double kappa,
                 StepScratch& scratch) {
  const std::size_t dim = embeddings.cols();
  auto& u = scratch.projection;
  auto& e = scratch.accumulated;
  u.assign(dim, 0.0);
  e.assign(dim, 0.0);

  for (WordId c : sample.context) {
    const auto row = embeddings.row(c);
    for (std::size_t k = 0; k < dim; ++k) u[k] += Access::load(row[k]);
  }

  double log_prob = 0.0;
  const auto path = tree.path_of(sample.center);
  for (std::size_t j = 0; j < path.code.size(); ++j) {
    const int bit = path.code[j];
    auto node = node_params.row(path.nodes[j]);
    double logit = 0.0;
    for (std::size_t k = 0; k < dim; ++k) logit += u[k] * Access::load(node[k]);
    logit = clamp_logit(logit);
    log_prob += bit == 0 ? -std::log1p(std::exp(-logit))
                         : -std::log1p(std::exp(logit));
    const double g = 1.0 - bit - sigmoid(logit);
    for (std::size_t k = 0; k < dim; ++k) {
      const double b = Access::load(node[k]);
      e[k] += g * b;
      Access::store(node[k], b + kappa * g * u[k]);
    }
  }

  for (WordId c : sample.context) {
    auto row = embeddings.row(c);
    for (std::size_t k = 0; k < dim; ++k) {
      Access::store(row[k], Access::load(row[k]) + kappa * e[k]);
    }
  }
  return log_prob;
}

bool all_finite(const Matrix& m) {
  return std::all_of(m.values().begin(), m.values().end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

void TrainingConfig::validate() const {
  if (dim == 0) throw DomainError("dim must be positive");
  if (half_window == 0) throw DomainError("window must be positive");
  if (batch == 0) throw DomainError("batch must be positive");
  if (epochs == 0) throw DomainError("epochs must be positive");
  if (min_count == 0) throw DomainError("min_count must be positive");
  if (!(kappa0 > 0.0) || !std::isfinite(kappa0)) {
    throw DomainError("initial learning rate must be positive");
  }
  if (!(decay > 0.0 && decay <= 1.0)) {
    throw DomainError("decay must lie in (0, 1]");
  }
  if (!deterministic && threads == 0) {
    throw DomainError("threads must be positive");
  }
}

TrainerState init_state(std::size_t vocab_size, std::size_t dim,
                        std::uint64_t seed, double kappa) {
  TrainerState state;
  state.embeddings = Matrix(vocab_size, dim);
  state.node_params = Matrix(vocab_size > 0 ? vocab_size - 1 : 0, dim);
  state.kappa = kappa;
  Rng rng(seed);
  const double half = 0.5 / static_cast<double>(dim);
  for (double& v : state.embeddings.values()) v = rng.uniform(-half, half);
  return state;
}

ProjectionVector project(std::span<const WordId> context,
                         const Matrix& embeddings) {
  if (context.empty()) throw DomainError("cannot project an empty context");
  ProjectionVector u(embeddings.cols(), 0.0);
  for (WordId c : context) {
    if (c >= embeddings.rows()) {
      throw DomainError(fmt::format("context id {} out of range", c));
    }
    const auto row = embeddings.row(c);
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += row[k];
  }
  return u;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-clamp_logit(x))); }

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double branch_prob(std::span<const double> projection,
                   std::span<const double> node, int bit) {
  const double p = sigmoid(dot(projection, node));
  return bit == 0 ? p : 1.0 - p;
}

double word_prob(const HuffmanTree& tree, const TrainerState& state,
                 std::span<const double> projection, WordId word) {
  const auto path = tree.path_of(word);
  double p = 1.0;
  for (std::size_t j = 0; j < path.code.size(); ++j) {
    p *= branch_prob(projection, state.node_params.row(path.nodes[j]),
                     path.code[j]);
  }
  return p;
}

double node_objective(std::span<const double> projection,
                      std::span<const double> node, int bit) {
  const double x = clamp_logit(dot(projection, node));
  return bit == 0 ? -std::log1p(std::exp(-x)) : -std::log1p(std::exp(x));
}

double log_likelihood(std::span<const ContextSample> samples,
                      const HuffmanTree& tree, const TrainerState& state) {
  double total = 0.0;
  for (const auto& sample : samples) {
    const auto u = project(sample.context, state.embeddings);
    const auto path = tree.path_of(sample.center);
    for (std::size_t j = 0; j < path.code.size(); ++j) {
      total += node_objective(u, state.node_params.row(path.nodes[j]),
                              path.code[j]);
    }
  }
  return total;
}

std::vector<double> grad_beta(std::span<const double> projection,
                              std::span<const double> node, int bit) {
  const double g = 1.0 - bit - sigmoid(dot(projection, node));
  std::vector<double> out(projection.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = g * projection[k];
  return out;
}

std::vector<double> grad_projection(std::span<const double> projection,
                                    std::span<const double> node, int bit) {
  const double g = 1.0 - bit - sigmoid(dot(projection, node));
  std::vector<double> out(node.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = g * node[k];
  return out;
}

double sgd_step(const ContextSample& sample, const HuffmanTree& tree,
                TrainerState& state) {
  if (sample.context.empty()) throw DomainError("sample has an empty context");
  StepScratch scratch;
  return step_impl<PlainAccess>(sample, tree, state.embeddings,
                                state.node_params, state.kappa, scratch);
}

TrainingResult train(std::span<const ContextSample> samples,
                     const Vocabulary& vocab, const HuffmanTree& tree,
                     const TrainingConfig& config) {
  config.validate();
  if (samples.empty()) throw DomainError("no training samples");
  const std::size_t vocab_size = vocab.size();
  if (tree.leaf_count() != vocab_size) {
    throw DomainError(fmt::format("Huffman tree has {} leaves but V = {}",
                                  tree.leaf_count(), vocab_size));
  }
  for (const auto& s : samples) {
    if (s.context.empty()) throw DomainError("sample has an empty context");
    if (s.center >= vocab_size ||
        std::any_of(s.context.begin(), s.context.end(),
                    [&](WordId c) { return c >= vocab_size; })) {
      throw DomainError("sample references a word outside the vocabulary");
    }
  }

  TrainingResult result;
  auto& state = result.state;
  state = init_state(vocab_size, config.dim, config.seed, config.kappa0);

  Rng shuffle_rng(Rng::derive_seed(config.seed, 1));
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  const std::size_t batch_count =
      (samples.size() + config.batch - 1) / config.batch;
  const bool parallel = !config.deterministic && config.threads > 1;

  double kappa = config.kappa0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    state.kappa = kappa;
    state.epoch = epoch;
    shuffle_rng.shuffle(std::span(order));

    auto run_batch = [&](std::size_t b, StepScratch& scratch, auto access) {
      using Access = decltype(access);
      const std::size_t begin = b * config.batch;
      const std::size_t end = std::min(samples.size(), begin + config.batch);
      double ll = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        ll += step_impl<Access>(samples[order[i]], tree, state.embeddings,
                                state.node_params, kappa, scratch);
      }
      return ll;
    };

    double epoch_ll = 0.0;
    if (!parallel) {
      StepScratch scratch;
      for (std::size_t b = 0; b < batch_count; ++b) {
        epoch_ll += run_batch(b, scratch, PlainAccess{});
      }
    } else {
      std::atomic<std::size_t> next_batch{0};
      std::vector<double> partial(config.threads, 0.0);
      {
        std::vector<std::jthread> workers;
        workers.reserve(config.threads);
        for (std::size_t t = 0; t < config.threads; ++t) {
          workers.emplace_back([&, t] {
            StepScratch scratch;
            for (std::size_t b = next_batch.fetch_add(1); b < batch_count;
                 b = next_batch.fetch_add(1)) {
              partial[t] += run_batch(b, scratch, RelaxedAccess{});
            }
          });
        }
      }
      for (double p : partial) epoch_ll += p;
    }

    if (!all_finite(state.embeddings) || !all_finite(state.node_params)) {
      throw DomainError(fmt::format(
          "training diverged in epoch {} (non-finite parameters)", epoch));
    }
    result.log.push_back(
        {epoch, kappa, -epoch_ll / static_cast<double>(samples.size())});
    kappa *= config.decay;
  }
  state.kappa = kappa;
  state.epoch = config.epochs;
  return result;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a, b);
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ab += a[k] * b[k];
    aa += a[k] * a[k];
    bb += b[k] * b[k];
  }
  if (aa == 0.0 || bb == 0.0) return 0.0;
  return ab / (std::sqrt(aa) * std::sqrt(bb));
}

std::vector<Neighbor> nearest_neighbors(const Matrix& embeddings, WordId word,
                                        std::size_t k) {
  const std::size_t rows = embeddings.rows();
  if (word >= rows) {
    throw DomainError(fmt::format("word id {} out of range (V = {})", word, rows));
  }
  if (k >= rows) {
    throw DomainError(
        fmt::format("k = {} must be smaller than V = {}", k, rows));
  }
  std::vector<Neighbor> all;
  all.reserve(rows - 1);
  const auto query = embeddings.row(word);
  for (std::size_t w = 0; w < rows; ++w) {
    if (w == word) continue;
    all.push_back({static_cast<WordId>(w),
                   cosine_similarity(query, embeddings.row(w))});
  }
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k),
                    all.end(), [](const Neighbor& a, const Neighbor& b) {
                      if (a.cosine != b.cosine) return a.cosine > b.cosine;
                      return a.word < b.word;
                    });
  all.resize(k);
  return all;
}

}  // namespace wvkit
