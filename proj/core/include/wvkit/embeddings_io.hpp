#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wvkit/cbow.hpp"
#include "wvkit/matrix.hpp"

namespace wvkit {

/// Words with their vectors, in vocabulary id order.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(std::vector<std::string> words, Matrix vectors);

  static EmbeddingTable from_training(const Vocabulary& vocab,
                                      const TrainerState& state);

  std::size_t size() const { return words_.size(); }
  std::size_t dim() const { return vectors_.cols(); }
  const std::vector<std::string>& words() const { return words_; }
  const Matrix& vectors() const { return vectors_; }
  std::optional<WordId> find(std::string_view word) const;

 private:
  std::vector<std::string> words_;
  Matrix vectors_;
  std::unordered_map<std::string, WordId> index_;
};

/// Text format: a `<V> <d>` header, then `<surface> <d values>` per word with
/// nine significant digits.
void write_embeddings(std::ostream& out, const EmbeddingTable& table);
void write_embeddings(const std::filesystem::path& path,
                      const EmbeddingTable& table);

/// Throws IoError on unreadable files and malformed content.
EmbeddingTable read_embeddings(std::istream& in);
EmbeddingTable read_embeddings(const std::filesystem::path& path);

/// `<epoch> <kappa> <mean_nll>` per line, shortest round-trip decimals.
void write_loss_log(std::ostream& out, const std::vector<EpochLog>& log);

}  // namespace wvkit
