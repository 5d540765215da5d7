#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wvkit {

using WordId = std::uint32_t;
using Sentence = std::vector<std::string>;

/// Lowercases, strips every Unicode punctuation code point (general category
/// P*) and splits on runs of Unicode whitespace. Empty tokens are dropped.
/// Input is UTF-8; malformed byte sequences act as separators.
std::vector<std::string> tokenize(std::string_view raw_text);

struct VocabEntry {
  std::string surface;
  WordId id = 0;
  std::uint64_t frequency = 0;
};

/// Dense word ids ordered by descending frequency; equal frequencies keep
/// first-occurrence order, so the ids are a pure function of the input.
class Vocabulary {
 public:
  Vocabulary() = default;

  /// Throws DomainError when min_count is 0 or no token survives the filter.
  static Vocabulary build(std::span<const Sentence> sentences,
                          std::uint64_t min_count);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<VocabEntry>& entries() const { return entries_; }
  const VocabEntry& at(WordId id) const;
  std::optional<WordId> find(std::string_view surface) const;

  std::uint64_t min_count() const { return min_count_; }
  /// Raw token count seen during build, before filtering.
  std::uint64_t total_tokens() const { return total_tokens_; }

  std::vector<std::uint64_t> frequencies() const;

  /// Maps tokens to ids; out-of-vocabulary tokens are deleted.
  std::vector<WordId> encode(std::span<const std::string> tokens) const;

  /// Diagnostic dump, one `<surface> <id> <frequency>` line per entry.
  void write_dump(std::ostream& out) const;

 private:
  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, WordId> index_;
  std::uint64_t min_count_ = 1;
  std::uint64_t total_tokens_ = 0;
};

inline Vocabulary build_vocabulary(std::span<const Sentence> sentences,
                                   std::uint64_t min_count) {
  return Vocabulary::build(sentences, min_count);
}

/// One CBOW training example: a center word and its in-window neighbours.
struct ContextSample {
  WordId center = 0;
  std::vector<WordId> context;

  friend bool operator==(const ContextSample&, const ContextSample&) = default;
};

/// Fixed window of half_window tokens on each side, truncated at the sentence
/// ends. Centers without any neighbour produce no sample.
std::vector<ContextSample> extract_contexts(std::span<const WordId> sentence,
                                            std::size_t half_window);

/// Samples for a whole tokenized corpus. Lines are sentence boundaries.
std::vector<ContextSample> extract_corpus_contexts(
    std::span<const Sentence> sentences, const Vocabulary& vocab,
    std::size_t half_window);

/// Reads a UTF-8 corpus, one sentence per line, tokenizing each line. Lines
/// that tokenize to nothing are kept as empty sentences.
std::vector<Sentence> read_corpus(const std::filesystem::path& path);

}  // namespace wvkit
