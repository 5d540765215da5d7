// Brute-force caption metric references for tests. Every count is redone by
// linear scans over plain token vectors; nothing is shared with the library's
// n-gram maps.
#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "wvkit/caption_metrics.hpp"
#include "wvkit/random.hpp"

namespace wvkit::testing {

inline std::vector<CaptionRecord> random_caption_corpus(Rng& rng) {
  static const std::vector<std::string> words = {"a", "b", "c", "d", "e", "f"};
  const std::size_t vocab = 2 + rng.below(words.size() - 1);
  auto sentence = [&](std::size_t min_len) {
    Tokens t(min_len + rng.below(7));
    for (auto& w : t) w = words[rng.below(vocab)];
    return t;
  };
  std::vector<CaptionRecord> records(1 + rng.below(5));
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].image_id = "r" + std::to_string(i);
    records[i].references.resize(1 + rng.below(3));
    for (auto& ref : records[i].references) ref = sentence(1);
    records[i].candidate = sentence(0);
  }
  return records;
}

// Occurrences of tokens[at, at+n) inside text.
inline std::size_t count_occurrences(const Tokens& text, const Tokens& tokens,
                                     std::size_t at, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + n <= text.size(); ++i) {
    bool same = true;
    for (std::size_t k = 0; k < n && same; ++k) same = text[i + k] == tokens[at + k];
    count += same;
  }
  return count;
}

inline double oracle_bleu(const std::vector<CaptionRecord>& records, std::size_t max_n) {
  std::vector<std::size_t> matched(max_n, 0), total(max_n, 0);
  std::size_t c = 0, r = 0;
  for (const auto& rec : records) {
    const auto& cand = rec.candidate;
    c += cand.size();
    std::size_t best = rec.references[0].size();
    for (const auto& ref : rec.references) {
      const long long d_new = std::llabs(static_cast<long long>(ref.size()) -
                                         static_cast<long long>(cand.size()));
      const long long d_old = std::llabs(static_cast<long long>(best) -
                                         static_cast<long long>(cand.size()));
      if (d_new < d_old || (d_new == d_old && ref.size() < best)) best = ref.size();
    }
    r += best;
    for (std::size_t n = 1; n <= max_n; ++n) {
      if (cand.size() < n) continue;
      for (std::size_t i = 0; i + n <= cand.size(); ++i) {
        // Count each distinct n-gram once, at its first position.
        bool first = true;
        for (std::size_t j = 0; j < i && first; ++j) {
          bool same = true;
          for (std::size_t k = 0; k < n && same; ++k) same = cand[j + k] == cand[i + k];
          if (same) first = false;
        }
        if (!first) continue;
        const std::size_t in_cand = count_occurrences(cand, cand, i, n);
        std::size_t max_ref = 0;
        for (const auto& ref : rec.references) {
          max_ref = std::max(max_ref, count_occurrences(ref, cand, i, n));
        }
        matched[n - 1] += std::min(in_cand, max_ref);
        total[n - 1] += in_cand;
      }
    }
  }
  if (c == 0) return 0.0;
  double log_sum = 0.0;
  for (std::size_t i = 0; i < max_n; ++i) {
    if (matched[i] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched[i]) / static_cast<double>(total[i]));
  }
  const double cd = static_cast<double>(c), rd = static_cast<double>(r);
  const double bp = cd < rd ? std::exp(1.0 - rd / cd) : 1.0;
  return bp * std::exp(log_sum / static_cast<double>(max_n));
}

// CIDEr-D straight from its definition, n-grams kept as (tokens, weight)
// lists.
inline double oracle_cider(const std::vector<CaptionRecord>& records,
                           std::size_t max_n = 4, double sigma = 6.0) {
  struct Gram {
    Tokens tokens;
    double weight;
  };
  auto grams_of = [](const Tokens& t, std::size_t n) {
    std::vector<std::pair<Tokens, std::size_t>> out;
    for (std::size_t i = 0; i + n <= t.size(); ++i) {
      Tokens g(t.begin() + static_cast<std::ptrdiff_t>(i),
               t.begin() + static_cast<std::ptrdiff_t>(i + n));
      bool found = false;
      for (auto& [tokens, count] : out) {
        if (tokens == g) {
          ++count;
          found = true;
        }
      }
      if (!found) out.emplace_back(g, 1);
    }
    return out;
  };
  auto doc_freq = [&](const Tokens& g) {
    std::size_t df = 0;
    for (const auto& rec : records) {
      bool present = false;
      for (const auto& ref : rec.references) {
        for (const auto& [tokens, count] : grams_of(ref, g.size())) present |= tokens == g;
      }
      df += present;
    }
    return df;
  };
  const double log_docs = std::log(static_cast<double>(records.size()));
  auto vectorize = [&](const Tokens& t, std::size_t n) {
    std::vector<Gram> v;
    for (const auto& [g, tf] : grams_of(t, n)) {
      const double df = std::max(1.0, static_cast<double>(doc_freq(g)));
      v.push_back({g, static_cast<double>(tf) * (log_docs - std::log(df))});
    }
    return v;
  };
  auto norm = [](const std::vector<Gram>& v) {
    double s = 0;
    for (const auto& g : v) s += g.weight * g.weight;
    return std::sqrt(s);
  };

  double total = 0.0;
  for (const auto& rec : records) {
    double record_score = 0.0;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto cv = vectorize(rec.candidate, n);
      for (const auto& ref : rec.references) {
        const auto rv = vectorize(ref, n);
        double dot = 0.0;
        for (const auto& a : cv) {
          for (const auto& b : rv) {
            if (a.tokens == b.tokens) dot += std::min(a.weight, b.weight) * b.weight;
          }
        }
        const double na = norm(cv), nb = norm(rv);
        if (na != 0 && nb != 0) dot /= na * nb;
        const double delta = static_cast<double>(rec.candidate.size()) -
                             static_cast<double>(ref.size());
        record_score += dot * std::exp(-delta * delta / (2 * sigma * sigma));
      }
    }
    total += record_score / static_cast<double>(max_n) /
             static_cast<double>(rec.references.size()) * 10.0;
  }
  return total / static_cast<double>(records.size());
}

}  // namespace wvkit::testing
