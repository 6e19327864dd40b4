#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "illusion/phoneme.hpp"

namespace illusion {

// One audiovisual substitution: keep the audio phoneme, dub the lip movement,
// and list the phoneme sequences viewers tend to perceive instead (in
// decreasing reported effectiveness).
struct McGurkRule {
  Phoneme audio;
  Phoneme lip;
  std::vector<std::vector<Phoneme>> percepts;

  bool operator==(const McGurkRule&) const = default;
};

// Substitution rule set keyed by audio phoneme. JH and ZH count as one
// equivalence class when matching (neither occurs in the built-in table, so
// this only matters for user-supplied rule files).
class RuleTable {
public:
  RuleTable() = default;
  explicit RuleTable(std::vector<McGurkRule> rules);

  // The built-in ten-rule table from the phoneme-pair study.
  static const RuleTable& builtin();

  // Rules file: one rule per line,
  //   AUDIO | LIP | P1a P1b, P2, ...
  // commas separate alternative percepts, spaces separate phonemes within
  // a percept, '#' starts a comment.
  static RuleTable parse(std::istream& in);
  static RuleTable load(const std::filesystem::path& path);
  void write(std::ostream& out) const;

  const McGurkRule* find(Phoneme audio) const;
  const std::vector<McGurkRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

private:
  std::vector<McGurkRule> rules_;
  std::array<std::int8_t, kPhonemeCount> by_audio_{};  // index+1, 0 = none
};

// One phoneme occurrence chosen for dubbing.
struct DubSite {
  std::size_t index;  // position in the pronunciation
  McGurkRule rule;
};

// The dub specification for one word: which occurrences to visually replace.
struct DubPlan {
  std::string word;
  Pronunciation pron;
  std::vector<DubSite> sites;
};

// One possible perceived phoneme sequence for a plan, with the percept
// alternative chosen at each site.
struct PerceptCandidate {
  std::vector<Phoneme> phonemes;
  std::vector<std::size_t> choices;  // per-site percept index

  bool operator==(const PerceptCandidate&) const = default;
};

struct Confusion {
  std::string word;
  PerceptCandidate candidate;
};

enum class PlanMode : std::uint8_t {
  AllSites,    // one plan covering every rule-covered occurrence
  SingleSite,  // one plan per occurrence
};

// True iff any phoneme of the pronunciation has a substitution rule.
bool is_attemptable(const Pronunciation& pron, const RuleTable& rules = RuleTable::builtin());

// Empty iff not attemptable.
std::vector<DubPlan> plan_dubs(const Pronunciation& pron, PlanMode mode = PlanMode::AllSites,
                               const RuleTable& rules = RuleTable::builtin());

// Cartesian product of per-site percept alternatives in listed order
// (earlier sites vary slowest), truncated to limit.
std::vector<PerceptCandidate> enumerate_percepts(const DubPlan& plan, std::size_t limit = 256);

// Candidates whose phoneme sequence matches a real word, in candidate order
// then alphabetical word order.
std::vector<Confusion> lexical_confusions(const std::vector<PerceptCandidate>& candidates,
                                          const PronunciationLexicon& lexicon);

}  // namespace illusion
