#include "illusion/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "illusion/rng.hpp"

namespace illusion {

FrequencyLexicon FrequencyLexicon::parse(std::istream& in) {
  // Format: `word<whitespace>count` per line, '#' starts a comment.
  // Duplicate words sum; malformed lines are skipped with a warning.
  FrequencyLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = trim(view.substr(0, hash));
    }
    if (view.empty()) continue;
    std::vector<std::string> tokens = split_whitespace(view);
    std::uint64_t count = 0;
    bool ok = tokens.size() == 2;
    if (ok) {
      try {
        count = std::stoull(tokens[1]);
      } catch (const std::exception&) {
        ok = false;
      }
      ok = ok && count > 0;
    }
    if (!ok) {
      ++lex.skipped_;
      log_warning("frequency list line " + std::to_string(line_no) + " skipped: \"" +
                  std::string(view) + "\"");
      continue;
    }
    lex.counts_[to_lower(tokens[0])] += count;
    lex.total_ += count;
  }
  if (lex.counts_.empty()) throw DataError("frequency list contains zero valid lines");

  lex.rank_order_.reserve(lex.counts_.size());
  lex.min_count_ = UINT64_MAX;
  for (const auto& [word, count] : lex.counts_) {
    lex.rank_order_.push_back(word);
    lex.min_count_ = std::min(lex.min_count_, count);
  }
  std::sort(lex.rank_order_.begin(), lex.rank_order_.end(),
            [&](const std::string& a, const std::string& b) {
              std::uint64_t ca = lex.counts_.at(a), cb = lex.counts_.at(b);
              return ca != cb ? ca > cb : a < b;
            });
  return lex;
}

FrequencyLexicon FrequencyLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read frequency list: " + path.string());
  return parse(in);
}

std::uint64_t FrequencyLexicon::count(const std::string& word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

bool FrequencyLexicon::contains(const std::string& word) const {
  return counts_.find(word) != counts_.end();
}

double FrequencyLexicon::log_frequency(const std::string& word) const {
  auto it = counts_.find(word);
  const std::uint64_t c = it == counts_.end() ? min_count_ : it->second;
  return std::log(static_cast<double>(c));
}

double prevalence(const FrequencyLexicon& lex, std::size_t top_k, std::uint64_t corpus_total) {
  if (top_k < 1 || top_k > lex.size()) {
    throw DomainError("prevalence: top_k out of range");
  }
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < top_k; ++i) covered += lex.count(lex.rank_order()[i]);
  const auto denom = corpus_total != 0 ? corpus_total : lex.total();
  return static_cast<double>(covered) / static_cast<double>(denom);
}

std::vector<std::string> sample_words(const FrequencyLexicon& lex, std::size_t n,
                                      std::size_t top_k, bool unique, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_words: n must be >= 1");
  if (top_k < 1 || top_k > lex.size()) throw DomainError("sample_words: top_k out of range");
  if (unique && n > top_k) {
    throw DomainError("sample_words: cannot draw " + std::to_string(n) +
                      " unique words from top " + std::to_string(top_k));
  }

  std::vector<double> weights(top_k);
  double mass = 0.0;
  for (std::size_t i = 0; i < top_k; ++i) {
    weights[i] = static_cast<double>(lex.count(lex.rank_order()[i]));
    mass += weights[i];
  }

  SplitMix64 rng(seed);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t draw = 0; draw < n; ++draw) {
    const double target = rng.next_double() * mass;
    double acc = 0.0;
    std::size_t picked = top_k - 1;
    for (std::size_t i = 0; i < top_k; ++i) {
      acc += weights[i];
      if (target < acc && weights[i] > 0.0) {
        picked = i;
        break;
      }
    }
    // Guard against the all-remaining-zero tail from accumulated rounding.
    while (weights[picked] == 0.0 && picked > 0) --picked;
    out.push_back(lex.rank_order()[picked]);
    if (unique) {
      mass -= weights[picked];
      weights[picked] = 0.0;
    }
  }
  return out;
}

}  // namespace illusion
