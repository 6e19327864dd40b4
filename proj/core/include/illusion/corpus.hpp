#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "illusion/common.hpp"

namespace illusion {

// Ranked word-frequency data: counts, total token mass, and a rank order by
// descending count (ties alphabetical). Immutable after load.
class FrequencyLexicon {
public:
  static FrequencyLexicon parse(std::istream& in);
  static FrequencyLexicon load(const std::filesystem::path& path);

  std::uint64_t count(const std::string& word) const;  // 0 when absent
  bool contains(const std::string& word) const;
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return rank_order_.size(); }
  const std::vector<std::string>& rank_order() const { return rank_order_; }
  std::uint64_t min_count() const { return min_count_; }
  std::size_t skipped_lines() const { return skipped_; }

  // Natural log of the word count; out-of-vocabulary words floor at
  // log(min count).
  double log_frequency(const std::string& word) const;

private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::vector<std::string> rank_order_;
  std::uint64_t total_ = 0;
  std::uint64_t min_count_ = 0;
  std::size_t skipped_ = 0;
};

// Fraction of corpus tokens covered by the top_k ranked words. When the list
// is itself a truncation of a larger corpus, pass the full corpus token count
// as corpus_total (0 = use the list's own total).
double prevalence(const FrequencyLexicon& lex, std::size_t top_k, std::uint64_t corpus_total = 0);

// Draws n words from the top_k ranked words with probability proportional to
// count. unique = without replacement (sequential renormalization).
// Deterministic given seed.
std::vector<std::string> sample_words(const FrequencyLexicon& lex, std::size_t n,
                                      std::size_t top_k, bool unique, std::uint64_t seed);

}  // namespace illusion
