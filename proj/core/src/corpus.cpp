#include "wvkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "wvkit/error.hpp"

namespace wvkit {

std::vector<std::string> tokenize(std::string_view raw_text) {
  std::vector<std::string> tokens;
  std::string current;
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(raw_text.data());
  const auto length = static_cast<std::int32_t>(raw_text.size());

  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  };

  std::int32_t offset = 0;
  while (offset < length) {
    UChar32 cp = 0;
    U8_NEXT(bytes, offset, length, cp);
    if (cp < 0 || u_isUWhiteSpace(cp)) {
      flush();
      continue;
    }
    if (u_ispunct(cp)) continue;
    cp = u_tolower(cp);
    char buffer[U8_MAX_LENGTH];
    std::int32_t written = 0;
    U8_APPEND_UNSAFE(buffer, written, cp);
    current.append(buffer, static_cast<std::size_t>(written));
  }
  flush();
  return tokens;
}

Vocabulary Vocabulary::build(std::span<const Sentence> sentences,
                             std::uint64_t min_count) {
  if (min_count == 0) throw DomainError("min_count must be at least 1");

  // Counting in first-occurrence order makes the stable sort below break
  // frequency ties deterministically.
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<VocabEntry> counted;
  std::uint64_t total = 0;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence) {
      ++total;
      auto [it, inserted] = slot.try_emplace(token, counted.size());
      if (inserted) counted.push_back({token, 0, 0});
      ++counted[it->second].frequency;
    }
  }

  std::erase_if(counted, [&](const VocabEntry& e) {
    return e.frequency < min_count;
  });
  if (counted.empty()) {
    throw DomainError(fmt::format(
        "empty vocabulary: no token occurs at least {} times", min_count));
  }
  std::stable_sort(counted.begin(), counted.end(),
                   [](const VocabEntry& a, const VocabEntry& b) {
                     return a.frequency > b.frequency;
                   });

  Vocabulary vocab;
  vocab.min_count_ = min_count;
  vocab.total_tokens_ = total;
  vocab.entries_ = std::move(counted);
  for (std::size_t i = 0; i < vocab.entries_.size(); ++i) {
    vocab.entries_[i].id = static_cast<WordId>(i);
    vocab.index_.emplace(vocab.entries_[i].surface, static_cast<WordId>(i));
  }
  return vocab;
}

const VocabEntry& Vocabulary::at(WordId id) const {
  if (id >= entries_.size()) {
    throw DomainError(fmt::format("word id {} out of range (V = {})", id,
                                  entries_.size()));
  }
  return entries_[id];
}

std::optional<WordId> Vocabulary::find(std::string_view surface) const {
  auto it = index_.find(std::string(surface));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> Vocabulary::frequencies() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.frequency);
  return out;
}

std::vector<WordId> Vocabulary::encode(
    std::span<const std::string> tokens) const {
  std::vector<WordId> ids;
  ids.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (auto id = find(token)) ids.push_back(*id);
  }
  return ids;
}

void Vocabulary::write_dump(std::ostream& out) const {
  for (const auto& e : entries_) {
    out << e.surface << ' ' << e.id << ' ' << e.frequency << '\n';
  }
}

std::vector<ContextSample> extract_contexts(std::span<const WordId> sentence,
                                            std::size_t half_window) {
  std::vector<ContextSample> samples;
  const std::size_t n = sentence.size();
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t lo = pos >= half_window ? pos - half_window : 0;
    const std::size_t hi = std::min(n, pos + half_window + 1);
    ContextSample sample{sentence[pos], {}};
    sample.context.reserve(hi - lo);
    for (std::size_t j = lo; j < hi; ++j) {
      if (j != pos) sample.context.push_back(sentence[j]);
    }
    if (!sample.context.empty()) samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<ContextSample> extract_corpus_contexts(
    std::span<const Sentence> sentences, const Vocabulary& vocab,
    std::size_t half_window) {
  std::vector<ContextSample> samples;
  for (const auto& sentence : sentences) {
    const auto ids = vocab.encode(sentence);
    auto part = extract_contexts(ids, half_window);
    std::move(part.begin(), part.end(), std::back_inserter(samples));
  }
  return samples;
}

std::vector<Sentence> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read corpus '{}'", path.string()));
  std::vector<Sentence> sentences;
  std::string line;
  while (std::getline(in, line)) sentences.push_back(tokenize(line));
  if (in.bad()) {
    throw IoError(fmt::format("read error in corpus '{}'", path.string()));
  }
  return sentences;
}

}  // namespace wvkit
