#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "wvkit/error.hpp"
#include "wvkit/huffman.hpp"
#include "wvkit/random.hpp"

namespace wvkit {
namespace {

std::vector<std::uint8_t> code_of(const HuffmanTree& tree, WordId w) {
  const auto p = tree.path_of(w);
  return {p.code.begin(), p.code.end()};
}

void check_structure(const HuffmanTree& tree) {
  const std::size_t v = tree.leaf_count();
  ASSERT_EQ(tree.internal_count(), v - 1);
  double kraft = 0.0;
  for (WordId w = 0; w < v; ++w) {
    const auto p = tree.path_of(w);
    ASSERT_EQ(p.code.size(), p.nodes.size());
    ASSERT_GE(p.code.size(), 1u);
    EXPECT_EQ(p.nodes.front(), tree.root());
    kraft += std::ldexp(1.0, -static_cast<int>(p.code.size()));
    // Walking the bits from the root must land on this leaf, visiting the
    // recorded internal nodes on the way.
    HuffmanTree::NodeRef at = static_cast<HuffmanTree::NodeRef>(v) + tree.root();
    for (std::size_t j = 0; j < p.code.size(); ++j) {
      ASSERT_GE(at, v);
      EXPECT_EQ(at - v, p.nodes[j]);
      EXPECT_LT(p.nodes[j], tree.internal_count());
      at = tree.children(at - static_cast<std::uint32_t>(v))[p.code[j]];
    }
    EXPECT_EQ(at, w);
  }
  EXPECT_DOUBLE_EQ(kraft, 1.0);
  // Prefix-free.
  for (WordId a = 0; a < v; ++a) {
    for (WordId b = 0; b < v; ++b) {
      if (a == b) continue;
      const auto ca = code_of(tree, a);
      const auto cb = code_of(tree, b);
      if (ca.size() <= cb.size()) {
        EXPECT_FALSE(std::equal(ca.begin(), ca.end(), cb.begin())) << a << " " << b;
      }
    }
  }
}

TEST(Huffman, FourWordExample) {
  const std::vector<std::uint64_t> freqs = {5, 2, 1, 1};
  const auto tree = HuffmanTree::build(freqs);
  EXPECT_EQ(tree.code_length(0), 1u);
  EXPECT_EQ(tree.code_length(1), 2u);
  EXPECT_EQ(tree.code_length(2), 3u);
  EXPECT_EQ(tree.code_length(3), 3u);
  EXPECT_EQ(tree.weighted_length(freqs), 15u);
  EXPECT_EQ(testing::min_weighted_path_length(freqs), 15u);
  check_structure(tree);
  // The heaviest word takes the positive (0) branch at the root.
  EXPECT_EQ(code_of(tree, 0), std::vector<std::uint8_t>{0});
}

TEST(Huffman, TwoWords) {
  const std::vector<std::uint64_t> freqs = {1, 1};
  const auto tree = HuffmanTree::build(freqs);
  const auto a = code_of(tree, 0);
  const auto b = code_of(tree, 1);
  ASSERT_EQ(a.size(), 1u);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_NE(a[0], b[0]);
  EXPECT_EQ(tree.path_of(0).nodes[0], tree.root());
}

TEST(Huffman, SingleWordIsDegenerate) {
  const std::vector<std::uint64_t> freqs = {3};
  const auto tree = HuffmanTree::build(freqs);
  EXPECT_EQ(tree.internal_count(), 0u);
  EXPECT_TRUE(tree.path_of(0).code.empty());
  EXPECT_TRUE(tree.path_of(0).nodes.empty());
}

TEST(Huffman, Errors) {
  EXPECT_THROW(HuffmanTree::build(std::vector<std::uint64_t>{}), DomainError);
  const std::vector<std::uint64_t> freqs = {2, 1};
  const auto tree = HuffmanTree::build(freqs);
  EXPECT_THROW(tree.path_of(2), DomainError);
}

TEST(Huffman, OptimalAgainstExhaustiveEnumeration) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> freqs(2 + rng.below(7));
    for (auto& f : freqs) f = 1 + rng.below(rng.bernoulli(0.5) ? 4 : 100);
    const auto tree = HuffmanTree::build(freqs);
    EXPECT_EQ(tree.weighted_length(freqs), testing::min_weighted_path_length(freqs));
    check_structure(tree);
  }
}

TEST(Huffman, DeterministicAndStructurallyValidForLargerVocabularies) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> freqs(2 + rng.below(120));
    for (auto& f : freqs) f = 1 + rng.below(50);
    const auto a = HuffmanTree::build(freqs);
    const auto b = HuffmanTree::build(freqs);
    EXPECT_EQ(a, b);
    check_structure(a);
  }
}

TEST(Huffman, CodeDump) {
  const std::vector<Sentence> sentences = {{"a", "a", "a", "b", "c"}};
  const auto vocab = build_vocabulary(sentences, 1);
  std::ostringstream out;
  build_huffman(vocab).write_codes(out, vocab);
  EXPECT_EQ(out.str(), "a 0\nb 11\nc 10\n");
}

}  // namespace
}  // namespace wvkit
