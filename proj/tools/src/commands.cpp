#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <variant>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "wvkit/caption_metrics.hpp"
#include "wvkit/checkpoint.hpp"
#include "wvkit/corpus.hpp"
#include "wvkit/embeddings_io.hpp"
#include "wvkit/error.hpp"
#include "wvkit/huffman.hpp"

namespace wvkit::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

std::size_t infer_classes(const std::vector<LabeledText>& texts,
                          std::optional<std::size_t> requested) {
  std::size_t top = 0;
  for (const auto& t : texts) top = std::max(top, t.label);
  if (!requested) return top + 1;
  if (*requested == 0) throw DomainError("--classes must be positive");
  for (const auto& t : texts) {
    if (t.label >= *requested) {
      throw DomainError(fmt::format("label {} out of range for {} classes",
                                    t.label, *requested));
    }
  }
  return *requested;
}

// Turns labeled text into fixed-length id sequences. Fails when no sentence
// shares a single token with the embedding vocabulary.
std::vector<LabeledSequence> encode_dataset(const std::vector<LabeledText>& texts,
                                            const EmbeddingTable& table,
                                            std::size_t length, WordId pad,
                                            std::ostream& err) {
  std::vector<LabeledSequence> data;
  data.reserve(texts.size());
  std::size_t unknown = 0;
  for (const auto& t : texts) {
    auto ids = make_sequence(t.tokens, table, length, pad);
    if (std::ranges::all_of(ids, [pad](WordId id) { return id == pad; })) ++unknown;
    data.push_back({std::move(ids), t.label});
  }
  if (unknown == data.size()) {
    throw DomainError("no dataset sentence contains a word from the embedding vocabulary");
  }
  if (unknown > 0) {
    fmt::print(err, "warning: {} of {} sentences have no known words\n", unknown,
               data.size());
  }
  return data;
}

EmbeddingTable table_from_checkpoint(const Checkpoint& checkpoint) {
  const auto& embedding = std::get<EmbeddingLayer>(checkpoint.model.layers().front());
  Matrix vectors(embedding.vocab_size, embedding.dim);
  std::ranges::copy(embedding.weights.values(), vectors.values().begin());
  return EmbeddingTable(checkpoint.words, std::move(vectors));
}

}  // namespace

void train_embeddings(const EmbeddingRun& run, std::ostream& out, std::ostream& err) {
  TrainingConfig config = run.training;
  config.deterministic = run.deterministic || config.threads <= 1;
  config.validate();

  const auto sentences = read_corpus(run.corpus);
  const auto vocab = Vocabulary::build(sentences, config.min_count);
  const auto tree = HuffmanTree::build(vocab);
  const auto samples = extract_corpus_contexts(sentences, vocab, config.half_window);
  fmt::print(err, "{} sentences, {} tokens, vocabulary {}, {} training windows\n",
             sentences.size(), vocab.total_tokens(), vocab.size(), samples.size());

  const auto result = train(samples, vocab, tree, config);
  for (const auto& e : result.log) {
    fmt::print(err, "epoch {} kappa {:.6g} loss {:.6f}\n", e.epoch, e.kappa, e.mean_nll);
  }

  write_embeddings(run.out, EmbeddingTable::from_training(vocab, result.state));
  const auto log_path = run.loss_log.empty() ? std::filesystem::path(run.out.string() + ".loss")
                                             : run.loss_log;
  auto log = open_output(log_path);
  write_loss_log(log, result.log);
  finish_output(log, log_path);
  fmt::print(out, "wrote {} ({} x {}) and {}\n", run.out.string(), vocab.size(),
             config.dim, log_path.string());
}

void train_classifier(const ClassifierRun& run, std::ostream& out, std::ostream& err) {
  const auto table = read_embeddings(run.embeddings);
  const auto texts = read_labeled_dataset(run.dataset);
  if (texts.empty()) {
    throw DomainError(fmt::format("dataset '{}' has no samples", run.dataset.string()));
  }
  const std::size_t classes = infer_classes(texts, run.classes);

  auto model = CnnModel::make(table.vectors(), classes, run.model, run.training.seed);
  const auto data = encode_dataset(texts, table, run.model.sequence_length,
                                   model.pad_id(), err);
  fmt::print(err, "{} samples, {} classes, vocabulary {}, dim {}\n", data.size(), classes,
             table.size(), table.dim());

  const auto log = train_classifier(data, model, run.training);

  write_checkpoint(run.out, Checkpoint{model, table.words()});
  const auto log_path = run.accuracy_log.empty()
                            ? std::filesystem::path(run.out.string() + ".acc")
                            : run.accuracy_log;
  auto file = open_output(log_path);
  for (const auto& e : log) {
    fmt::print(file, "{} {} {} {}\n", e.epoch, e.kappa, e.mean_loss, e.train_accuracy);
    fmt::print(err, "epoch {} kappa {:.6g} loss {:.6f} accuracy {:.4f}\n", e.epoch,
               e.kappa, e.mean_loss, e.train_accuracy);
  }
  finish_output(file, log_path);
  fmt::print(out, "accuracy {}\n", log.empty() ? accuracy(model, data) : log.back().train_accuracy);
}

void eval_classifier(const ClassifierEval& run, std::ostream& out, std::ostream& err) {
  const auto checkpoint = read_checkpoint(run.model);
  const auto& model = checkpoint.model;
  const auto texts = read_labeled_dataset(run.dataset);
  if (texts.empty()) {
    throw DomainError(fmt::format("dataset '{}' has no samples", run.dataset.string()));
  }
  infer_classes(texts, model.classes());
  const auto data = encode_dataset(texts, table_from_checkpoint(checkpoint),
                                   model.sequence_length(), model.pad_id(), err);
  fmt::print(out, "accuracy {}\n", accuracy(model, data));
}

void eval_captions(const CaptionEval& run, std::ostream& out, std::ostream& err) {
  const auto records = read_caption_records(run.captions);
  if (records.size() == 1) {
    fmt::print(err,
               "warning: a single record makes every CIDEr idf weight zero; "
               "the CIDEr score is meaningless\n");
  }
  BleuOptions bleu_options;
  bleu_options.smooth = run.smooth_bleu;
  const auto report = evaluate(records, bleu_options);
  auto file = open_output(run.report);
  write_report(file, report);
  finish_output(file, run.report);
  write_report(out, report);
}

void nearest(const NearestQuery& query, std::ostream& out, std::ostream& err) {
  const auto table = read_embeddings(query.embeddings);
  const auto id = table.find(query.word);
  if (!id) throw DomainError(fmt::format("unknown word '{}'", query.word));
  if (table.size() < 2) throw DomainError("the embedding file has no other words");
  std::size_t k = query.k;
  if (k > table.size() - 1) {
    k = table.size() - 1;
    fmt::print(err, "warning: k = {} exceeds the {} other words; using {}\n", query.k, k, k);
  }
  for (const auto& n : nearest_neighbors(table.vectors(), *id, k)) {
    fmt::print(out, "{} {:.4f}\n", table.words()[n.word], n.cosine);
  }
}

}  // namespace wvkit::cli
