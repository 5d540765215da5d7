#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "wvkit/corpus.hpp"

namespace wvkit {

/// Huffman tree over word frequencies, the output layer of hierarchical
/// softmax.
///
/// Every word owns a code (one bit per branch decision, root first) and a
/// path (the internal node consulted for each decision). Internal nodes are
/// numbered 0..V-2 in merge order, so the root is always V-2 and the row of
/// the internal-node parameter matrix for a decision is simply its path entry.
///
/// Bit 0 marks the higher-frequency child of a merge (the positive branch of
/// the sigmoid), bit 1 the lower-frequency one. Merges pop the two smallest
/// nodes ordered by (frequency, creation index); leaves are created in id
/// order and merged nodes after them, so the tree is reproducible.
class HuffmanTree {
 public:
  struct Path {
    std::span<const std::uint8_t> code;
    std::span<const std::uint32_t> nodes;
  };

  /// Child reference: values < leaf_count() are word ids, larger values are
  /// leaf_count() + internal index.
  using NodeRef = std::uint32_t;

  HuffmanTree() = default;

  /// Throws DomainError for an empty frequency list or a zero frequency.
  static HuffmanTree build(std::span<const std::uint64_t> frequencies);
  static HuffmanTree build(const Vocabulary& vocab);

  std::size_t leaf_count() const { return leaf_count_; }
  std::size_t internal_count() const { return children_.size(); }

  /// Internal index of the root. Only meaningful when internal_count() > 0.
  std::uint32_t root() const {
    return static_cast<std::uint32_t>(children_.size() - 1);
  }

  /// Children of an internal node, indexed by code bit.
  const std::array<NodeRef, 2>& children(std::uint32_t internal) const {
    return children_.at(internal);
  }

  /// Throws DomainError for an id >= leaf_count().
  Path path_of(WordId word) const;

  std::size_t code_length(WordId word) const {
    return offsets_.at(word + 1) - offsets_.at(word);
  }

  std::uint64_t weighted_length(std::span<const std::uint64_t> frequencies) const;

  /// Diagnostic dump, one `<word> <bitstring>` line per word.
  void write_codes(std::ostream& out, const Vocabulary& vocab) const;

  friend bool operator==(const HuffmanTree&, const HuffmanTree&) = default;

 private:
  std::size_t leaf_count_ = 0;
  std::vector<std::array<NodeRef, 2>> children_;
  // Codes and paths of all words, concatenated; word w occupies
  // [offsets_[w], offsets_[w + 1]).
  std::vector<std::size_t> offsets_;
  std::vector<std::uint8_t> codes_;
  std::vector<std::uint32_t> nodes_;
};

inline HuffmanTree build_huffman(const Vocabulary& vocab) {
  return HuffmanTree::build(vocab);
}

}  // namespace wvkit
