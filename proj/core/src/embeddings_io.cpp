#include "wvkit/embeddings_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "wvkit/error.hpp"

namespace wvkit {

EmbeddingTable::EmbeddingTable(std::vector<std::string> words, Matrix vectors)
    : words_(std::move(words)), vectors_(std::move(vectors)) {
  if (words_.size() != vectors_.rows()) {
    throw DomainError(fmt::format("{} words but {} vectors", words_.size(),
                                  vectors_.rows()));
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!index_.emplace(words_[i], static_cast<WordId>(i)).second) {
      throw DomainError(fmt::format("duplicate word '{}'", words_[i]));
    }
  }
}

EmbeddingTable EmbeddingTable::from_training(const Vocabulary& vocab,
                                             const TrainerState& state) {
  std::vector<std::string> words;
  words.reserve(vocab.size());
  for (const auto& e : vocab.entries()) words.push_back(e.surface);
  return EmbeddingTable(std::move(words), state.embeddings);
}

std::optional<WordId> EmbeddingTable::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void write_embeddings(std::ostream& out, const EmbeddingTable& table) {
  fmt::print(out, "{} {}\n", table.size(), table.dim());
  fmt::memory_buffer line;
  for (std::size_t w = 0; w < table.size(); ++w) {
    line.clear();
    fmt::format_to(std::back_inserter(line), "{}", table.words()[w]);
    for (double v : table.vectors().row(w)) {
      fmt::format_to(std::back_inserter(line), " {:.9g}", v);
    }
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

void write_embeddings(const std::filesystem::path& path,
                      const EmbeddingTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  write_embeddings(out, table);
  if (!out) throw IoError(fmt::format("write error on '{}'", path.string()));
}

EmbeddingTable read_embeddings(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("embedding file is empty");
  std::istringstream header(line);
  std::size_t count = 0, dim = 0;
  if (!(header >> count >> dim) || dim == 0) {
    throw IoError(fmt::format("bad embedding header '{}'", line));
  }
  std::vector<std::string> words;
  words.reserve(count);
  Matrix vectors(count, dim);
  for (std::size_t w = 0; w < count; ++w) {
    if (!std::getline(in, line)) {
      throw IoError(fmt::format("expected {} vectors, found {}", count, w));
    }
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    for (std::size_t k = 0; k < dim; ++k) {
      if (!(fields >> vectors(w, k))) {
        throw IoError(fmt::format("line {}: expected {} values", w + 2, dim));
      }
    }
    std::string extra;
    if (word.empty() || fields >> extra) {
      throw IoError(fmt::format("line {}: malformed vector line", w + 2));
    }
    words.push_back(std::move(word));
  }
  try {
    return EmbeddingTable(std::move(words), std::move(vectors));
  } catch (const DomainError& e) {
    throw IoError(e.what());
  }
}

EmbeddingTable read_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read '{}'", path.string()));
  return read_embeddings(in);
}

void write_loss_log(std::ostream& out, const std::vector<EpochLog>& log) {
  for (const auto& e : log) {
    fmt::print(out, "{} {} {}\n", e.epoch, e.kappa, e.mean_nll);
  }
}

}  // namespace wvkit
