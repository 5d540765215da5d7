// wvkit command-line entry point.
//
// Exit codes: 0 success, 1 bad data (DomainError), 2 usage or I/O error.
//
// Every subcommand accepts --config FILE, a flat `key = value` document whose
// keys are the long flag names without dashes. Unknown keys are rejected and
// flags given on the command line override values from the file.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "wvkit/error.hpp"

namespace {

namespace fs = std::filesystem;
using namespace wvkit::cli;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

void add_config(CLI::App& cmd) {
  cmd.add_option("--config", "Read options from a key = value file");
}

// CLI11 only reads config files for the top-level app, and expects
// [subcommand] sections there. Instead the file named by a subcommand's
// --config is expanded into `--key=value` arguments placed right after the
// subcommand name, so every later command-line flag overrides it and unknown
// keys fail like unknown flags. Returns the arguments in the reversed order
// App::parse(std::vector) wants.
std::vector<std::string> expand_config(int argc, char** argv, const CLI::App& app) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto sub = std::ranges::find_if(args, [&app](const std::string& a) {
    return app.get_subcommand_no_throw(a) != nullptr;
  });
  std::vector<std::string> expanded;
  if (sub != args.end()) {
    for (auto it = sub + 1; it != args.end(); ++it) {
      std::string file;
      if (*it == "--config" && it + 1 != args.end()) {
        file = *(it + 1);
      } else if (it->starts_with("--config=")) {
        file = it->substr(9);
      } else {
        continue;
      }
      for (const auto& item : CLI::ConfigINI().from_file(file)) {
        if (!item.parents.empty()) {
          throw CLI::ConfigError(fmt::format(
              "config '{}': sections are not supported ({})", file, item.fullname()));
        }
        std::string value;
        for (const auto& input : item.inputs) value += (value.empty() ? "" : " ") + input;
        expanded.push_back(fmt::format("--{}={}", item.name, value));
      }
    }
    args.insert(sub + 1, expanded.begin(), expanded.end());
  }
  std::ranges::reverse(args);
  return args;
}

// Outputs must not clobber an input, and their directory must exist, so both
// are checked before any work starts.
void check_outputs(const std::vector<fs::path>& inputs,
                   const std::vector<fs::path>& outputs) {
  for (const auto& out : outputs) {
    if (out.empty()) continue;
    const auto dir = fs::absolute(out).parent_path();
    if (!fs::is_directory(dir)) {
      throw CLI::ValidationError(
          fmt::format("output directory '{}' does not exist", dir.string()));
    }
    for (const auto& in : inputs) {
      std::error_code ec;
      if (fs::equivalent(in, out, ec)) {
        throw CLI::ValidationError(
            fmt::format("output '{}' would overwrite an input file", out.string()));
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-vector training, WV-CNN text classification and caption metrics",
               "wvkit"};
  app.require_subcommand(1);
  // Config values come first on the expanded command line; the last value
  // given for an option wins.
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  EmbeddingRun emb;
  auto* train_emb = app.add_subcommand(
      "train-embeddings", "Train CBOW word vectors with hierarchical softmax");
  add_config(*train_emb);
  train_emb->add_option("--corpus", emb.corpus, "One sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  train_emb->add_option("--out", emb.out, "Embedding file to write")->required();
  train_emb->add_option("--loss-log", emb.loss_log,
                        "Per-epoch loss log (default: <out>.loss)");
  train_emb->add_option("--dim", emb.training.dim, "Vector dimension")
      ->capture_default_str();
  train_emb->add_option("--window", emb.training.half_window,
                        "Context words on each side of the center word")
      ->capture_default_str();
  train_emb->add_option("--lr", emb.training.kappa0, "Initial learning rate")
      ->capture_default_str();
  train_emb->add_option("--decay", emb.training.decay, "Per-epoch learning rate factor")
      ->capture_default_str();
  train_emb->add_option("--batch", emb.training.batch, "Windows per work unit")
      ->capture_default_str();
  train_emb->add_option("--epochs", emb.training.epochs)->capture_default_str();
  train_emb->add_option("--min-count", emb.training.min_count,
                        "Drop words seen fewer times")
      ->capture_default_str();
  train_emb->add_option("--seed", emb.training.seed)->capture_default_str();
  train_emb->add_option("--threads", emb.training.threads,
                        "Parallel workers, ignored with --deterministic")
      ->capture_default_str();
  train_emb->add_flag("--deterministic", emb.deterministic,
                      "Single worker, bit-reproducible output");

  ClassifierRun cls;
  auto* train_cls = app.add_subcommand("train-classifier",
                                       "Train a WV-CNN classifier on labeled sentences");
  add_config(*train_cls);
  train_cls->add_option("--embeddings", cls.embeddings, "Embedding file")
      ->required()
      ->check(CLI::ExistingFile);
  train_cls->add_option("--dataset", cls.dataset, "Lines of <label><TAB><sentence>")
      ->required()
      ->check(CLI::ExistingFile);
  train_cls->add_option("--out", cls.out, "Checkpoint to write")->required();
  train_cls->add_option("--accuracy-log", cls.accuracy_log,
                        "Per-epoch log (default: <out>.acc)");
  train_cls->add_option("--classes", cls.classes,
                        "Number of classes (default: largest label + 1)");
  train_cls->add_option("--sequence-length", cls.model.sequence_length)
      ->capture_default_str();
  train_cls->add_option("--kernel", cls.model.kernel)->capture_default_str();
  train_cls->add_option("--channels", cls.model.channels)->capture_default_str();
  train_cls->add_option("--pool", cls.model.pool)->capture_default_str();
  train_cls->add_option("--dropout", cls.model.dropout)->capture_default_str();
  train_cls->add_flag("--freeze-embeddings", cls.model.freeze_embeddings,
                      "Keep the embedding layer fixed");
  train_cls->add_option("--epochs", cls.training.epochs)->capture_default_str();
  train_cls->add_option("--lr", cls.training.kappa0)->capture_default_str();
  train_cls->add_option("--decay", cls.training.decay)->capture_default_str();
  train_cls->add_option("--batch", cls.training.batch)->capture_default_str();
  train_cls->add_option("--seed", cls.training.seed)->capture_default_str();

  ClassifierEval cls_eval;
  auto* eval_cls = app.add_subcommand("eval-classifier",
                                      "Accuracy of a saved checkpoint on a dataset");
  add_config(*eval_cls);
  eval_cls->add_option("--model", cls_eval.model, "Checkpoint file")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cls->add_option("--dataset", cls_eval.dataset)->required()->check(CLI::ExistingFile);

  CaptionEval cap;
  auto* eval_cap = app.add_subcommand("eval-captions", "BLEU-1/3/4 and CIDEr-D report");
  add_config(*eval_cap);
  eval_cap->add_option("--captions", cap.captions,
                       "JSON array of {id, refs, candidate}")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cap->add_option("--report", cap.report, "Report to write")->required();
  eval_cap->add_flag("--smooth-bleu", cap.smooth_bleu,
                     "Replace zero n-gram matches by 0.1");

  NearestQuery near;
  auto* nearest_cmd = app.add_subcommand("nearest", "Most similar words by cosine");
  add_config(*nearest_cmd);
  nearest_cmd->add_option("--embeddings", near.embeddings)
      ->required()
      ->check(CLI::ExistingFile);
  nearest_cmd->add_option("--word", near.word)->required();
  nearest_cmd->add_option("-k,--k", near.k, "Neighbors to list")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(expand_config(argc, argv, app));
    if (train_emb->parsed()) {
      check_outputs({emb.corpus}, {emb.out, emb.loss_log});
      train_embeddings(emb, std::cout, std::cerr);
    } else if (train_cls->parsed()) {
      check_outputs({cls.embeddings, cls.dataset}, {cls.out, cls.accuracy_log});
      train_classifier(cls, std::cout, std::cerr);
    } else if (eval_cls->parsed()) {
      eval_classifier(cls_eval, std::cout, std::cerr);
    } else if (eval_cap->parsed()) {
      check_outputs({cap.captions}, {cap.report});
      eval_captions(cap, std::cout, std::cerr);
    } else if (nearest_cmd->parsed()) {
      nearest(near, std::cout, std::cerr);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  } catch (const wvkit::DomainError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kDomainError;
  } catch (const wvkit::IoError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsageError;
  }
  return 0;
}
