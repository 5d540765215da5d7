#include "wvkit/huffman.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <tuple>

#include <fmt/format.h>

#include "wvkit/error.hpp"

namespace wvkit {

namespace {

struct QueueItem {
  std::uint64_t frequency;
  std::uint32_t node;  // creation index doubles as node reference

  bool operator>(const QueueItem& other) const {
    return std::tie(frequency, node) > std::tie(other.frequency, other.node);
  }
};

constexpr std::uint32_t kNoParent = 0xffffffffu;

}  // namespace

HuffmanTree HuffmanTree::build(std::span<const std::uint64_t> frequencies) {
  if (frequencies.empty()) {
    throw DomainError("cannot build a Huffman tree over an empty vocabulary");
  }
  const auto leaves = static_cast<std::uint32_t>(frequencies.size());

  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
  for (std::uint32_t i = 0; i < leaves; ++i) {
    if (frequencies[i] == 0) {
      throw DomainError(fmt::format("word {} has zero frequency", i));
    }
    queue.push({frequencies[i], i});
  }

  HuffmanTree tree;
  tree.leaf_count_ = leaves;
  tree.children_.reserve(leaves - 1);

  std::vector<std::uint32_t> parent(2 * static_cast<std::size_t>(leaves) - 1,
                                    kNoParent);
  std::vector<std::uint8_t> bit(parent.size(), 0);

  while (queue.size() > 1) {
    const QueueItem low = queue.top();
    queue.pop();
    const QueueItem high = queue.top();
    queue.pop();
    const auto internal = static_cast<std::uint32_t>(tree.children_.size());
    const std::uint32_t ref = leaves + internal;
    tree.children_.push_back({high.node, low.node});
    parent[high.node] = internal;
    bit[high.node] = 0;
    parent[low.node] = internal;
    bit[low.node] = 1;
    queue.push({low.frequency + high.frequency, ref});
  }

  tree.offsets_.assign(leaves + 1, 0);
  std::vector<std::uint8_t> code;
  std::vector<std::uint32_t> nodes;
  for (std::uint32_t w = 0; w < leaves; ++w) {
    code.clear();
    nodes.clear();
    for (std::uint32_t n = w; parent[n] != kNoParent; n = leaves + parent[n]) {
      code.push_back(bit[n]);
      nodes.push_back(parent[n]);
    }
    std::reverse(code.begin(), code.end());
    std::reverse(nodes.begin(), nodes.end());
    tree.codes_.insert(tree.codes_.end(), code.begin(), code.end());
    tree.nodes_.insert(tree.nodes_.end(), nodes.begin(), nodes.end());
    tree.offsets_[w + 1] = tree.codes_.size();
  }
  return tree;
}

HuffmanTree HuffmanTree::build(const Vocabulary& vocab) {
  const auto freqs = vocab.frequencies();
  return build(freqs);
}

HuffmanTree::Path HuffmanTree::path_of(WordId word) const {
  if (word >= leaf_count_) {
    throw DomainError(fmt::format("word id {} out of range (V = {})", word,
                                  leaf_count_));
  }
  const std::size_t begin = offsets_[word];
  const std::size_t length = offsets_[word + 1] - begin;
  return {std::span(codes_).subspan(begin, length),
          std::span(nodes_).subspan(begin, length)};
}

std::uint64_t HuffmanTree::weighted_length(
    std::span<const std::uint64_t> frequencies) const {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < leaf_count_ && w < frequencies.size(); ++w) {
    total += frequencies[w] * code_length(static_cast<WordId>(w));
  }
  return total;
}

void HuffmanTree::write_codes(std::ostream& out, const Vocabulary& vocab) const {
  for (std::uint32_t w = 0; w < leaf_count_; ++w) {
    out << vocab.at(w).surface << ' ';
    for (auto b : path_of(w).code) out << static_cast<char>('0' + b);
    out << '\n';
  }
}

}  // namespace wvkit
