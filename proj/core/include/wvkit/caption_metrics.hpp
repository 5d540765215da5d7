#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace wvkit {

using Tokens = std::vector<std::string>;
using NGram = std::vector<std::string>;
using NGramCounts = std::map<NGram, std::size_t>;

/// One image: its reference captions and the candidate being scored, all
/// already tokenized.
struct CaptionRecord {
  std::string image_id;
  std::vector<Tokens> references;
  Tokens candidate;
};

struct MetricReport {
  double bleu1 = 0.0;
  double bleu3 = 0.0;
  double bleu4 = 0.0;
  double cider = 0.0;
  std::size_t record_count = 0;
};

/// All contiguous n-grams with their counts; empty when tokens.size() < n.
NGramCounts ngram_counts(std::span<const std::string> tokens, std::size_t n);

// BLEU ----------------------------------------------------------------------

struct BleuOptions {
  /// Replace a zero matched count by epsilon so short corpora do not
  /// collapse to 0.
  bool smooth = false;
  double epsilon = 0.1;
};

/// Corpus-level sufficient statistics, pooled over records.
struct BleuStats {
  std::vector<std::size_t> matched;  // clipped n-gram matches, index n-1
  std::vector<std::size_t> total;    // candidate n-grams, index n-1
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;  // sum of closest reference lengths
};

/// Candidate n-gram counts are clipped at the largest count of that n-gram in
/// any single reference. The reference length of a record is the one closest
/// to the candidate length, the shorter one on ties.
BleuStats bleu_stats(std::span<const CaptionRecord> records, std::size_t max_n);

/// Pooled precisions matched/total (0 where total is 0).
std::vector<double> pooled_precisions(const BleuStats& stats);

/// Brevity penalty times the geometric mean of p_1..p_max_n. Without
/// smoothing any zero precision gives 0.
double bleu_from_stats(const BleuStats& stats, const BleuOptions& options = {});

/// Cumulative corpus BLEU-max_n. Throws DomainError for an empty record set,
/// max_n == 0, or a record without references.
double bleu(std::span<const CaptionRecord> records, std::size_t max_n,
            const BleuOptions& options = {});

// CIDEr ---------------------------------------------------------------------

struct CiderOptions {
  std::size_t max_n = 4;
  double sigma = 6.0;
};

struct CiderResult {
  double score = 0.0;
  std::vector<double> per_record;
  /// True for single-record corpora, where every idf is log(1) = 0.
  bool degenerate_idf = false;
};

/// Consensus scoring in the deduplicated (CIDEr-D) form: tf-idf n-gram
/// vectors with idf = log(|records| / max(1, df)), df counted over the
/// references of each record; the candidate side of every dot product is
/// clipped at the reference value; a Gaussian length penalty with the given
/// sigma; scores averaged over n and references and multiplied by 10.
/// Throws DomainError for an empty record set or a record without
/// references.
CiderResult cider_scores(std::span<const CaptionRecord> records,
                         const CiderOptions& options = {});

inline double cider(std::span<const CaptionRecord> records,
                    const CiderOptions& options = {}) {
  return cider_scores(records, options).score;
}

// Report --------------------------------------------------------------------

/// BLEU-1, BLEU-3, BLEU-4 and CIDEr of one record set.
MetricReport evaluate(std::span<const CaptionRecord> records,
                      const BleuOptions& bleu_options = {});

/// Reads a JSON array of {"id": str, "refs": [str, ...], "candidate": str}
/// and tokenizes every caption. Throws IoError for unreadable or malformed
/// files and DomainError (naming the id) for a record with an empty or
/// missing "refs" list.
std::vector<CaptionRecord> read_caption_records(std::istream& in);
std::vector<CaptionRecord> read_caption_records(const std::filesystem::path& path);

/// JSON object with bleu1, bleu3, bleu4, cider at six decimals and the
/// record count.
void write_report(std::ostream& out, const MetricReport& report);

}  // namespace wvkit
