#include "wvkit/caption_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "wvkit/corpus.hpp"
#include "wvkit/error.hpp"

namespace wvkit {

namespace {

void require_records(std::span<const CaptionRecord> records) {
  if (records.empty()) throw DomainError("no caption records to evaluate");
  for (const auto& r : records) {
    if (r.references.empty()) {
      throw DomainError(
          fmt::format("record '{}' has no reference captions", r.image_id));
    }
  }
}

std::size_t closest_reference_length(const CaptionRecord& record) {
  const auto c = static_cast<long long>(record.candidate.size());
  std::size_t best = record.references.front().size();
  for (const auto& ref : record.references) {
    const auto r = static_cast<long long>(ref.size());
    const auto b = static_cast<long long>(best);
    if (std::llabs(r - c) < std::llabs(b - c) ||
        (std::llabs(r - c) == std::llabs(b - c) && r < b)) {
      best = ref.size();
    }
  }
  return best;
}

}  // namespace

NGramCounts ngram_counts(std::span<const std::string> tokens, std::size_t n) {
  NGramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[NGram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                   tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

// BLEU ----------------------------------------------------------------------

BleuStats bleu_stats(std::span<const CaptionRecord> records, std::size_t max_n) {
  if (max_n == 0) throw DomainError("BLEU order must be at least 1");
  require_records(records);
  BleuStats stats;
  stats.matched.assign(max_n, 0);
  stats.total.assign(max_n, 0);
  for (const auto& record : records) {
    stats.candidate_length += record.candidate.size();
    stats.reference_length += closest_reference_length(record);
    for (std::size_t n = 1; n <= max_n; ++n) {
      NGramCounts max_ref;
      for (const auto& ref : record.references) {
        for (const auto& [gram, count] : ngram_counts(ref, n)) {
          auto& slot = max_ref[gram];
          slot = std::max(slot, count);
        }
      }
      for (const auto& [gram, count] : ngram_counts(record.candidate, n)) {
        auto it = max_ref.find(gram);
        if (it != max_ref.end()) stats.matched[n - 1] += std::min(count, it->second);
        stats.total[n - 1] += count;
      }
    }
  }
  return stats;
}

std::vector<double> pooled_precisions(const BleuStats& stats) {
  std::vector<double> p(stats.total.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (stats.total[i] > 0) {
      p[i] = static_cast<double>(stats.matched[i]) /
             static_cast<double>(stats.total[i]);
    }
  }
  return p;
}

double bleu_from_stats(const BleuStats& stats, const BleuOptions& options) {
  const std::size_t max_n = stats.total.size();
  if (max_n == 0 || stats.candidate_length == 0) return 0.0;
  double log_sum = 0.0;
  for (std::size_t i = 0; i < max_n; ++i) {
    double matched = static_cast<double>(stats.matched[i]);
    double total = static_cast<double>(stats.total[i]);
    if (stats.matched[i] == 0) {
      if (!options.smooth) return 0.0;
      matched = options.epsilon;
      total = std::max(total, 1.0);
    }
    log_sum += std::log(matched / total);
  }
  const double c = static_cast<double>(stats.candidate_length);
  const double r = static_cast<double>(stats.reference_length);
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return brevity * std::exp(log_sum / static_cast<double>(max_n));
}

double bleu(std::span<const CaptionRecord> records, std::size_t max_n,
            const BleuOptions& options) {
  return bleu_from_stats(bleu_stats(records, max_n), options);
}

// CIDEr ---------------------------------------------------------------------

namespace {

// tf-idf vectors of one caption, one map per n-gram order.
struct TfIdf {
  std::vector<std::map<NGram, double>> vec;
  std::vector<double> norm;
  std::size_t length = 0;
};

using DocFrequency = std::map<NGram, std::size_t>;

TfIdf to_tfidf(const Tokens& tokens, const DocFrequency& df, double log_docs,
               std::size_t max_n) {
  TfIdf out{std::vector<std::map<NGram, double>>(max_n),
            std::vector<double>(max_n, 0.0), tokens.size()};
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& [gram, tf] : ngram_counts(tokens, n)) {
      auto it = df.find(gram);
      const double doc_count =
          it == df.end() ? 1.0 : std::max(1.0, static_cast<double>(it->second));
      const double weight = static_cast<double>(tf) * (log_docs - std::log(doc_count));
      out.vec[n - 1].emplace(gram, weight);
      out.norm[n - 1] += weight * weight;
    }
  }
  for (double& v : out.norm) v = std::sqrt(v);
  return out;
}

// Per-order clipped cosine with the length penalty applied.
std::vector<double> similarity(const TfIdf& cand, const TfIdf& ref,
                               double sigma) {
  const std::size_t max_n = cand.vec.size();
  const double delta =
      static_cast<double>(cand.length) - static_cast<double>(ref.length);
  const double penalty = std::exp(-(delta * delta) / (2.0 * sigma * sigma));
  std::vector<double> val(max_n, 0.0);
  for (std::size_t n = 0; n < max_n; ++n) {
    for (const auto& [gram, weight] : cand.vec[n]) {
      auto it = ref.vec[n].find(gram);
      if (it == ref.vec[n].end()) continue;
      val[n] += std::min(weight, it->second) * it->second;
    }
    if (cand.norm[n] != 0.0 && ref.norm[n] != 0.0) {
      val[n] /= cand.norm[n] * ref.norm[n];
    }
    val[n] *= penalty;
  }
  return val;
}

}  // namespace

CiderResult cider_scores(std::span<const CaptionRecord> records,
                         const CiderOptions& options) {
  require_records(records);
  if (options.max_n == 0) throw DomainError("CIDEr order must be at least 1");

  DocFrequency df;
  for (const auto& record : records) {
    std::set<NGram> seen;
    for (const auto& ref : record.references) {
      for (std::size_t n = 1; n <= options.max_n; ++n) {
        for (const auto& [gram, count] : ngram_counts(ref, n)) seen.insert(gram);
      }
    }
    for (const auto& gram : seen) ++df[gram];
  }

  CiderResult result;
  result.degenerate_idf = records.size() == 1;
  const double log_docs = std::log(static_cast<double>(records.size()));
  double total = 0.0;
  for (const auto& record : records) {
    const TfIdf cand = to_tfidf(record.candidate, df, log_docs, options.max_n);
    std::vector<double> score(options.max_n, 0.0);
    for (const auto& ref_tokens : record.references) {
      const TfIdf ref = to_tfidf(ref_tokens, df, log_docs, options.max_n);
      const auto sim = similarity(cand, ref, options.sigma);
      for (std::size_t n = 0; n < options.max_n; ++n) score[n] += sim[n];
    }
    double mean = 0.0;
    for (double s : score) mean += s;
    mean /= static_cast<double>(options.max_n);
    mean /= static_cast<double>(record.references.size());
    mean *= 10.0;
    result.per_record.push_back(mean);
    total += mean;
  }
  result.score = total / static_cast<double>(records.size());
  return result;
}

// Report --------------------------------------------------------------------

MetricReport evaluate(std::span<const CaptionRecord> records,
                      const BleuOptions& bleu_options) {
  require_records(records);
  MetricReport report;
  report.bleu1 = bleu(records, 1, bleu_options);
  report.bleu3 = bleu(records, 3, bleu_options);
  report.bleu4 = bleu(records, 4, bleu_options);
  report.cider = cider(records);
  report.record_count = records.size();
  return report;
}

std::vector<CaptionRecord> read_caption_records(std::istream& in) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(fmt::format("captions file is not valid JSON: {}", e.what()));
  }
  if (!doc.is_array()) throw IoError("captions file must hold a JSON array");

  std::vector<CaptionRecord> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    if (!item.is_object() || !item.contains("id") || !item["id"].is_string()) {
      throw IoError(fmt::format("caption record #{} has no string 'id'", i));
    }
    CaptionRecord record;
    record.image_id = item["id"].get<std::string>();
    if (!item.contains("refs") || !item["refs"].is_array() ||
        item["refs"].empty()) {
      throw DomainError(fmt::format("record '{}' has no reference captions",
                                    record.image_id));
    }
    for (const auto& ref : item["refs"]) {
      if (!ref.is_string()) {
        throw DomainError(fmt::format("record '{}' has a non-string reference",
                                      record.image_id));
      }
      record.references.push_back(tokenize(ref.get<std::string>()));
    }
    if (!item.contains("candidate") || !item["candidate"].is_string()) {
      throw DomainError(
          fmt::format("record '{}' has no candidate caption", record.image_id));
    }
    record.candidate = tokenize(item["candidate"].get<std::string>());
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<CaptionRecord> read_caption_records(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read captions '{}'", path.string()));
  return read_caption_records(in);
}

void write_report(std::ostream& out, const MetricReport& report) {
  fmt::print(out,
             "{{\n"
             "  \"bleu1\": {:.6f},\n"
             "  \"bleu3\": {:.6f},\n"
             "  \"bleu4\": {:.6f},\n"
             "  \"cider\": {:.6f},\n"
             "  \"records\": {}\n"
             "}}\n",
             report.bleu1, report.bleu3, report.bleu4, report.cider,
             report.record_count);
}

}  // namespace wvkit
