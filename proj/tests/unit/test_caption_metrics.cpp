#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "caption_oracle.hpp"
#include "wvkit/caption_metrics.hpp"
#include "wvkit/corpus.hpp"
#include "wvkit/error.hpp"
#include "wvkit/random.hpp"

namespace wvkit {
namespace {

CaptionRecord record(std::string id, std::vector<std::string> refs, std::string cand) {
  CaptionRecord r{std::move(id), {}, tokenize(cand)};
  for (const auto& ref : refs) r.references.push_back(tokenize(ref));
  return r;
}

TEST(NGramCounts, Examples) {
  const Tokens t = {"a", "b", "a"};
  EXPECT_EQ(ngram_counts(t, 1), (NGramCounts{{{"a"}, 2}, {{"b"}, 1}}));
  EXPECT_EQ(ngram_counts(t, 2), (NGramCounts{{{"a", "b"}, 1}, {{"b", "a"}, 1}}));
  EXPECT_TRUE(ngram_counts(Tokens{"a", "b"}, 3).empty());
}

TEST(Bleu, IdenticalCandidateScoresOne) {
  const std::vector<CaptionRecord> records = {
      record("1", {"a man rides a horse on the beach"}, "a man rides a horse on the beach")};
  EXPECT_DOUBLE_EQ(bleu(records, 1), 1.0);
  EXPECT_DOUBLE_EQ(bleu(records, 3), 1.0);
  EXPECT_DOUBLE_EQ(bleu(records, 4), 1.0);
}

TEST(Bleu, BrevityPenaltyExample) {
  const std::vector<CaptionRecord> records = {
      record("1", {"the cat sat on the mat"}, "the cat sat")};
  const auto p = pooled_precisions(bleu_stats(records, 3));
  EXPECT_EQ(p, (std::vector<double>{1, 1, 1}));
  EXPECT_NEAR(bleu(records, 1), 0.367879, 1e-6);
  EXPECT_NEAR(bleu(records, 3), 0.367879, 1e-6);
  EXPECT_DOUBLE_EQ(bleu(records, 1), std::exp(-1.0));
}

TEST(Bleu, NoOverlapAndClipping) {
  const std::vector<CaptionRecord> disjoint = {record("1", {"x y z"}, "a b c")};
  EXPECT_EQ(bleu(disjoint, 1), 0.0);

  const std::vector<CaptionRecord> clipped = {record("1", {"a"}, "a a a")};
  EXPECT_DOUBLE_EQ(pooled_precisions(bleu_stats(clipped, 1))[0], 1.0 / 3.0);
}

TEST(Bleu, ClosestReferenceLengthPrefersShorterOnTies) {
  // Candidate length 4; references of length 3 and 5 are equally close.
  const std::vector<CaptionRecord> records = {
      record("1", {"a b c", "a b c d e"}, "a b c d")};
  EXPECT_EQ(bleu_stats(records, 1).reference_length, 3u);
}

TEST(Bleu, SmoothingKeepsScoresPositive) {
  const std::vector<CaptionRecord> records = {record("1", {"a b c d"}, "a c b d")};
  EXPECT_EQ(bleu(records, 4), 0.0);
  BleuOptions smooth;
  smooth.smooth = true;
  const double s = bleu(records, 4, smooth);
  EXPECT_GT(s, 0.0);
  EXPECT_LT(s, 1.0);
}

TEST(Bleu, Errors) {
  EXPECT_THROW(bleu(std::vector<CaptionRecord>{}, 4), DomainError);
  const std::vector<CaptionRecord> no_refs = {CaptionRecord{"x", {}, {"a"}}};
  EXPECT_THROW(bleu(no_refs, 1), DomainError);
  const std::vector<CaptionRecord> ok = {record("1", {"a"}, "a")};
  EXPECT_THROW(bleu(ok, 0), DomainError);
}

TEST(Bleu, MatchesBruteForceOracleOnRandomCorpora) {
  Rng rng(100);
  for (int trial = 0; trial < 200; ++trial) {
    const auto records = testing::random_caption_corpus(rng);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
      EXPECT_EQ(bleu(records, n), testing::oracle_bleu(records, n)) << trial << " n=" << n;
    }
  }
}

TEST(Bleu, MatchedCountsNonIncreasingInOrder) {
  Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const auto records = testing::random_caption_corpus(rng);
    const auto stats = bleu_stats(records, 4);
    for (std::size_t n = 1; n < 4; ++n) {
      EXPECT_GE(stats.matched[n - 1], stats.matched[n]);
      EXPECT_GE(stats.total[n - 1], stats.total[n]);
    }
  }
}

TEST(Bleu, PooledPrecisionCanRiseWithOrder) {
  // Pooled precisions are not monotone in n in general: here p1 = 3/6 and
  // p2 = 3/5.
  const std::vector<CaptionRecord> records = {record("1", {"b a a b b"}, "a b a a a a")};
  const auto p = pooled_precisions(bleu_stats(records, 2));
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.6);
}

TEST(Metrics, PermutationInvariance) {
  Rng rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    auto records = testing::random_caption_corpus(rng);
    const auto before = evaluate(records);
    rng.shuffle(std::span(records));
    for (auto& r : records) rng.shuffle(std::span(r.references));
    const auto after = evaluate(records);
    EXPECT_EQ(before.bleu1, after.bleu1);
    EXPECT_EQ(before.bleu3, after.bleu3);
    EXPECT_EQ(before.bleu4, after.bleu4);
    EXPECT_NEAR(before.cider, after.cider, 1e-12);
    EXPECT_GE(after.cider, 0.0);
    for (double b : {after.bleu1, after.bleu3, after.bleu4}) {
      EXPECT_GE(b, 0.0);
      EXPECT_LE(b, 1.0);
    }
  }
}

TEST(Cider, NoOverlapScoresZero) {
  const std::vector<CaptionRecord> records = {
      record("a", {"red apple on table"}, "blue sky"),
      record("b", {"dog runs fast"}, "green grass grows")};
  EXPECT_EQ(cider(records), 0.0);
}

TEST(Cider, EmptyCandidatesScoreZero) {
  const std::vector<CaptionRecord> records = {
      record("a", {"red apple on table"}, ""), record("b", {"dog runs fast"}, "...")};
  EXPECT_EQ(cider(records), 0.0);
}

TEST(Cider, PerfectDisjointRecordReachesMaximum) {
  // Golden values from tests/oracles/caption_oracle.py.
  const std::vector<CaptionRecord> records = {
      record("A", {"red apple on table"}, "red apple on table"),
      record("B", {"dog runs fast"}, "a dog runs")};
  const auto result = cider_scores(records);
  EXPECT_NEAR(result.per_record[0], 10.0, 1e-12);
  EXPECT_NEAR(result.per_record[1], 2.916666666666667, 1e-9);
  EXPECT_NEAR(result.score, 6.458333333333334, 1e-9);
  EXPECT_FALSE(result.degenerate_idf);
}

TEST(Cider, SingleRecordIsDegenerate) {
  const std::vector<CaptionRecord> records = {record("A", {"red apple"}, "red apple")};
  const auto result = cider_scores(records);
  EXPECT_TRUE(result.degenerate_idf);
  EXPECT_EQ(result.score, 0.0);
  EXPECT_THROW(cider(std::vector<CaptionRecord>{}), DomainError);
}

TEST(Cider, MatchesDirectFormulaOracleOnRandomCorpora) {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const auto records = testing::random_caption_corpus(rng);
    EXPECT_NEAR(cider(records), testing::oracle_cider(records), 1e-9);
  }
}

std::vector<CaptionRecord> golden_records() {
  return read_caption_records(std::filesystem::path(WVKIT_TEST_DATA_DIR) /
                              "golden_captions.json");
}

TEST(Evaluate, GoldenCorpus) {
  // Frozen from tests/oracles/caption_oracle.py.
  const auto records = golden_records();
  ASSERT_EQ(records.size(), 5u);
  const auto report = evaluate(records);
  EXPECT_NEAR(report.bleu1, 0.8053415603309687, 1e-12);
  EXPECT_NEAR(report.bleu3, 0.40773968724602744, 1e-12);
  EXPECT_NEAR(report.bleu4, 0.29868044631296536, 1e-12);
  EXPECT_NEAR(report.cider, 1.6138217072952006, 1e-9);
  EXPECT_EQ(report.record_count, 5u);
  EXPECT_EQ(report.bleu1, bleu(records, 1));
  EXPECT_EQ(report.bleu4, bleu(records, 4));
  EXPECT_EQ(report.cider, cider(records));

  const auto per = cider_scores(records).per_record;
  const std::vector<double> golden = {2.786155177107819, 1.7443801156919603, 2.176346743616678,
                                      1.3594063128842395, 0.0028201871753067245};
  for (std::size_t i = 0; i < golden.size(); ++i) EXPECT_NEAR(per[i], golden[i], 1e-9);
}

TEST(Evaluate, IdenticalCaptions) {
  const std::vector<CaptionRecord> records = {
      record("1", {"a b c d e"}, "a b c d e"), record("2", {"f g h i"}, "f g h i")};
  const auto report = evaluate(records);
  EXPECT_EQ(report.bleu1, 1.0);
  EXPECT_EQ(report.bleu3, 1.0);
  EXPECT_EQ(report.bleu4, 1.0);
}

TEST(ReportFile, MatchesGoldenBytes) {
  std::ostringstream out;
  write_report(out, evaluate(golden_records()));
  std::ifstream golden(std::filesystem::path(WVKIT_TEST_DATA_DIR) / "golden_report.json");
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(out.str(), expected.str());
}

TEST(CaptionsFile, Errors) {
  std::istringstream empty_refs(R"([{"id": "ok", "refs": ["a"], "candidate": "a"},
                                    {"id": "img-7", "refs": [], "candidate": "a"}])");
  try {
    read_caption_records(empty_refs);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("img-7"), std::string::npos);
  }
  std::istringstream missing_refs(R"([{"id": "img-9", "candidate": "a"}])");
  EXPECT_THROW(read_caption_records(missing_refs), DomainError);
  std::istringstream not_array(R"({"id": "x"})");
  EXPECT_THROW(read_caption_records(not_array), IoError);
  std::istringstream broken("[{");
  EXPECT_THROW(read_caption_records(broken), IoError);
}

}  // namespace
}  // namespace wvkit
