#include "illusion/mcgurk.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace illusion {

namespace {

// JH and ZH are interchangeable for rule matching.
Phoneme canonical(Phoneme p) { return p == Phoneme::ZH ? Phoneme::JH : p; }

std::vector<Phoneme> seq(std::initializer_list<Phoneme> list) { return {list}; }

std::vector<McGurkRule> builtin_rules() {
  using enum Phoneme;
  return {
      {B, W, {seq({V}), seq({F}), seq({P})}},
      {DH, B, {seq({B})}},
      {F, Z, {seq({TH}), seq({T}), seq({B})}},
      {M, DH, {seq({N, TH}), seq({N}), seq({M, L})}},
      {P, T, {seq({T}), seq({K})}},
      {V, B, {seq({B})}},
      {D, V, {seq({V}), seq({T})}},
      {L, V, {seq({V})}},
      {TH, V, {seq({D}), seq({K}), seq({T}), seq({F})}},
      {W, L, {seq({L})}},
  };
}

void validate_rule(const McGurkRule& rule) {
  if (rule.percepts.empty()) {
    throw DataError("rule for " + std::string(to_string(rule.audio)) + " has no percepts");
  }
  for (const auto& percept : rule.percepts) {
    if (percept.empty()) {
      throw DataError("rule for " + std::string(to_string(rule.audio)) + " has an empty percept");
    }
    if (percept.size() == 1 && canonical(percept.front()) == canonical(rule.audio)) {
      throw DataError("rule for " + std::string(to_string(rule.audio)) +
                      " lists the audio phoneme as a percept");
    }
  }
}

}  // namespace

RuleTable::RuleTable(std::vector<McGurkRule> rules) : rules_(std::move(rules)) {
  by_audio_.fill(0);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    validate_rule(rules_[i]);
    auto slot = static_cast<std::size_t>(canonical(rules_[i].audio));
    if (by_audio_[slot] != 0) {
      throw DataError("duplicate rule for audio phoneme " +
                      std::string(to_string(rules_[i].audio)));
    }
    by_audio_[slot] = static_cast<std::int8_t>(i + 1);
  }
}

const RuleTable& RuleTable::builtin() {
  static const RuleTable table(builtin_rules());
  return table;
}

const McGurkRule* RuleTable::find(Phoneme audio) const {
  auto slot = static_cast<std::size_t>(canonical(audio));
  std::int8_t idx = by_audio_[slot];
  return idx == 0 ? nullptr : &rules_[static_cast<std::size_t>(idx - 1)];
}

RuleTable RuleTable::parse(std::istream& in) {
  std::vector<McGurkRule> rules;
  std::string line;
  std::size_t line_no = 0;
  auto parse_symbol = [&](std::string_view token) {
    auto p = parse_phoneme(trim(token));
    if (!p) {
      throw DataError("rules line " + std::to_string(line_no) + ": unknown phoneme \"" +
                      std::string(trim(token)) + "\"");
    }
    return *p;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = trim(view.substr(0, hash));
    }
    if (view.empty()) continue;

    std::vector<std::string> parts = split(view, '|');
    if (parts.size() != 3) {
      throw DataError("rules line " + std::to_string(line_no) +
                      ": expected AUDIO | LIP | PERCEPTS");
    }
    McGurkRule rule;
    rule.audio = parse_symbol(parts[0]);
    rule.lip = parse_symbol(parts[1]);
    for (const std::string& alt : split(parts[2], ',')) {
      std::vector<Phoneme> percept;
      for (const std::string& tok : split_whitespace(alt)) {
        percept.push_back(parse_symbol(tok));
      }
      if (percept.empty()) {
        throw DataError("rules line " + std::to_string(line_no) + ": empty percept");
      }
      rule.percepts.push_back(std::move(percept));
    }
    rules.push_back(std::move(rule));
  }
  if (rules.empty()) throw DataError("rules file contains no rules");
  return RuleTable(std::move(rules));
}

RuleTable RuleTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read rules file: " + path.string());
  return parse(in);
}

void RuleTable::write(std::ostream& out) const {
  for (const McGurkRule& rule : rules_) {
    out << to_string(rule.audio) << " | " << to_string(rule.lip) << " | ";
    for (std::size_t i = 0; i < rule.percepts.size(); ++i) {
      if (i) out << ", ";
      out << to_string(rule.percepts[i]);
    }
    out << '\n';
  }
}

bool is_attemptable(const Pronunciation& pron, const RuleTable& rules) {
  return std::any_of(pron.phonemes.begin(), pron.phonemes.end(),
                     [&](Phoneme p) { return rules.find(p) != nullptr; });
}

std::vector<DubPlan> plan_dubs(const Pronunciation& pron, PlanMode mode, const RuleTable& rules) {
  std::vector<DubSite> sites;
  for (std::size_t i = 0; i < pron.phonemes.size(); ++i) {
    if (const McGurkRule* rule = rules.find(pron.phonemes[i])) {
      sites.push_back({i, *rule});
    }
  }
  if (sites.empty()) return {};

  std::vector<DubPlan> plans;
  if (mode == PlanMode::AllSites) {
    plans.push_back({pron.word, pron, std::move(sites)});
  } else {
    plans.reserve(sites.size());
    for (DubSite& site : sites) {
      plans.push_back({pron.word, pron, {std::move(site)}});
    }
  }
  return plans;
}

std::vector<PerceptCandidate> enumerate_percepts(const DubPlan& plan, std::size_t limit) {
  if (limit < 1) throw DomainError("enumerate_percepts: limit must be >= 1");
  for (std::size_t s = 0; s < plan.sites.size(); ++s) {
    const DubSite& site = plan.sites[s];
    if (site.index >= plan.pron.phonemes.size() ||
        plan.pron.phonemes[site.index] != site.rule.audio ||
        (s > 0 && plan.sites[s - 1].index >= site.index)) {
      throw DomainError("dub plan sites do not match pronunciation for \"" + plan.word + "\"");
    }
  }

  std::vector<PerceptCandidate> out;
  std::vector<std::size_t> choices(plan.sites.size(), 0);
  for (;;) {
    PerceptCandidate candidate;
    candidate.choices = choices;
    candidate.phonemes.reserve(plan.pron.phonemes.size());
    std::size_t site_pos = 0;
    for (std::size_t i = 0; i < plan.pron.phonemes.size(); ++i) {
      if (site_pos < plan.sites.size() && plan.sites[site_pos].index == i) {
        const auto& percept = plan.sites[site_pos].rule.percepts[choices[site_pos]];
        candidate.phonemes.insert(candidate.phonemes.end(), percept.begin(), percept.end());
        ++site_pos;
      } else {
        candidate.phonemes.push_back(plan.pron.phonemes[i]);
      }
    }
    out.push_back(std::move(candidate));
    if (out.size() == limit) break;

    // Odometer: the last site varies fastest, matching listed percept order.
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++choices[k] < plan.sites[k].rule.percepts.size()) break;
      choices[k] = 0;
      if (k == 0) return out;
    }
    if (choices.size() == 0) break;  // site-less plan yields the original once
  }
  return out;
}

std::vector<Confusion> lexical_confusions(const std::vector<PerceptCandidate>& candidates,
                                          const PronunciationLexicon& lexicon) {
  std::vector<Confusion> out;
  for (const PerceptCandidate& candidate : candidates) {
    if (const auto* words = lexicon.words_for(candidate.phonemes)) {
      for (const std::string& word : *words) {
        out.push_back({word, candidate});
      }
    }
  }
  return out;
}

}  // namespace illusion
