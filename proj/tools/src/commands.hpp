#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "wvkit/cbow.hpp"
#include "wvkit/wvcnn.hpp"

namespace wvkit::cli {

struct EmbeddingRun {
  std::filesystem::path corpus;
  std::filesystem::path out;
  std::filesystem::path loss_log;  // defaults to <out>.loss
  TrainingConfig training;
  bool deterministic = false;
};

struct ClassifierRun {
  std::filesystem::path embeddings;
  std::filesystem::path dataset;
  std::filesystem::path out;
  std::filesystem::path accuracy_log;  // defaults to <out>.acc
  std::optional<std::size_t> classes;  // inferred from the labels when unset
  WvcnnOptions model;
  ClassifierConfig training;
};

struct ClassifierEval {
  std::filesystem::path model;
  std::filesystem::path dataset;
};

struct CaptionEval {
  std::filesystem::path captions;
  std::filesystem::path report;
  bool smooth_bleu = false;
};

struct NearestQuery {
  std::filesystem::path embeddings;
  std::string word;
  std::size_t k = 10;
};

// Each command writes results to files (or `out` for tables and summaries)
// and diagnostics to `err`. Library errors propagate unchanged.
void train_embeddings(const EmbeddingRun& run, std::ostream& out, std::ostream& err);
void train_classifier(const ClassifierRun& run, std::ostream& out, std::ostream& err);
void eval_classifier(const ClassifierEval& run, std::ostream& out, std::ostream& err);
void eval_captions(const CaptionEval& run, std::ostream& out, std::ostream& err);
void nearest(const NearestQuery& query, std::ostream& out, std::ostream& err);

}  // namespace wvkit::cli
