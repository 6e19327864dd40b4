#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "illusion/features.hpp"
#include "illusion/mcgurk.hpp"
#include "support/paths.hpp"

using namespace illusion;
using enum Phoneme;

namespace {

Pronunciation pron_of(std::string word, std::vector<Phoneme> phonemes) {
  return {std::move(word), std::move(phonemes)};
}

}  // namespace

TEST_SUITE_BEGIN("mcgurk");

TEST_CASE("builtin table matches the phoneme-pair study") {
  const RuleTable& table = RuleTable::builtin();
  CHECK(table.size() == 10);

  std::set<Phoneme> audios;
  for (const McGurkRule& rule : table.rules()) audios.insert(rule.audio);
  CHECK(audios.size() == 10);  // all distinct

  const McGurkRule* b = table.find(B);
  REQUIRE(b != nullptr);
  CHECK(b->lip == W);
  REQUIRE(b->percepts.size() == 3);
  CHECK(b->percepts[0] == std::vector<Phoneme>{V});
  CHECK(b->percepts[1] == std::vector<Phoneme>{F});
  CHECK(b->percepts[2] == std::vector<Phoneme>{P});

  const McGurkRule* m = table.find(M);
  REQUIRE(m != nullptr);
  CHECK(m->lip == DH);
  REQUIRE(m->percepts.size() == 3);
  CHECK(m->percepts[0] == std::vector<Phoneme>{N, TH});
  CHECK(m->percepts[1] == std::vector<Phoneme>{N});
  CHECK(m->percepts[2] == std::vector<Phoneme>{M, L});

  CHECK(table.find(TH)->percepts.size() == 4);
  CHECK(table.find(W)->percepts == std::vector<std::vector<Phoneme>>{{L}});
  CHECK(table.find(S) == nullptr);
}

TEST_CASE("attemptability is presence of any rule phoneme") {
  CHECK(is_attemptable(pron_of("bat", {B, AE, T})));
  CHECK_FALSE(is_attemptable(pron_of("see", {S, IY})));
}

TEST_CASE("plan_dubs covers every site or one per plan") {
  const auto pron = pron_of("bath", {B, AE, TH});

  const auto all = plan_dubs(pron, PlanMode::AllSites);
  REQUIRE(all.size() == 1);
  REQUIRE(all[0].sites.size() == 2);
  CHECK(all[0].sites[0].index == 0);
  CHECK(all[0].sites[0].rule.audio == B);
  CHECK(all[0].sites[1].index == 2);
  CHECK(all[0].sites[1].rule.audio == TH);

  const auto single = plan_dubs(pron, PlanMode::SingleSite);
  REQUIRE(single.size() == 2);
  CHECK(single[0].sites.size() == 1);
  CHECK(single[1].sites.size() == 1);

  CHECK(plan_dubs(pron_of("see", {S, IY}), PlanMode::AllSites).empty());
}

TEST_CASE("enumerate_percepts walks the cartesian product in listed order") {
  const auto pron = pron_of("bat", {B, AE, T});
  const auto plans = plan_dubs(pron, PlanMode::AllSites);
  REQUIRE(plans.size() == 1);

  const auto candidates = enumerate_percepts(plans[0], 64);
  REQUIRE(candidates.size() == 3);
  CHECK(candidates[0].phonemes == std::vector<Phoneme>{V, AE, T});
  CHECK(candidates[1].phonemes == std::vector<Phoneme>{F, AE, T});
  CHECK(candidates[2].phonemes == std::vector<Phoneme>{P, AE, T});

  CHECK(enumerate_percepts(plans[0], 2).size() == 2);
}

TEST_CASE("multi-site product: 3 x 4 candidates, first is V AE D") {
  const auto plans = plan_dubs(pron_of("bath", {B, AE, TH}), PlanMode::AllSites);
  const auto candidates = enumerate_percepts(plans[0], 64);
  REQUIRE(candidates.size() == 12);
  CHECK(candidates[0].phonemes == std::vector<Phoneme>{V, AE, D});
  // Last site varies fastest.
  CHECK(candidates[1].phonemes == std::vector<Phoneme>{V, AE, K});
  CHECK(candidates[11].phonemes == std::vector<Phoneme>{P, AE, F});
}

TEST_CASE("multi-phoneme percepts splice in place") {
  const auto plans = plan_dubs(pron_of("ma", {M, AA}), PlanMode::AllSites);
  const auto candidates = enumerate_percepts(plans[0], 64);
  REQUIRE(candidates.size() == 3);
  CHECK(candidates[0].phonemes == std::vector<Phoneme>{N, TH, AA});
  CHECK(candidates[1].phonemes == std::vector<Phoneme>{N, AA});
  CHECK(candidates[2].phonemes == std::vector<Phoneme>{M, L, AA});
}

TEST_CASE("percept count equals min(limit, product of alternatives)") {
  // Property over the bundled lexicon words.
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  for (const auto& [word, prons] : lex.entries()) {
    for (const auto& plan : plan_dubs(prons.front(), PlanMode::AllSites)) {
      std::size_t product = 1;
      for (const DubSite& site : plan.sites) product *= site.rule.percepts.size();
      const auto candidates = enumerate_percepts(plan, 7);
      CHECK(candidates.size() == std::min<std::size_t>(7, product));
      for (const PerceptCandidate& candidate : candidates) {
        CHECK(candidate.phonemes != plan.pron.phonemes);  // never the original
      }
    }
  }
}

TEST_CASE("the default plan covers every rule-phoneme occurrence") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  const RuleTable& rules = RuleTable::builtin();
  for (const auto& [word, prons] : lex.entries()) {
    const Pronunciation& pron = prons.front();
    std::size_t covered = 0;
    for (Phoneme p : pron.phonemes) covered += rules.find(p) != nullptr;
    const auto plans = plan_dubs(pron, PlanMode::AllSites, rules);
    if (covered == 0) {
      CHECK(plans.empty());
    } else {
      REQUIRE(plans.size() == 1);
      CHECK(plans[0].sites.size() == covered);
    }
    CHECK(plan_dubs(pron, PlanMode::SingleSite, rules).size() == covered);
  }
}

TEST_CASE("attemptable iff plans nonempty iff features nonzero") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  for (const auto& [word, prons] : lex.entries()) {
    const Pronunciation& pron = prons.front();
    const bool attemptable = is_attemptable(pron);
    CHECK(attemptable == !plan_dubs(pron, PlanMode::AllSites).empty());
    CHECK(attemptable == extract_features(pron).any());
  }
}

TEST_CASE("lexical confusions for bat include vat/fat/pat") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  const auto plans = plan_dubs(phonemize("bat", lex), PlanMode::AllSites);
  const auto confusions = lexical_confusions(enumerate_percepts(plans[0], 64), lex);
  std::vector<std::string> words;
  for (const Confusion& c : confusions) words.push_back(c.word);
  CHECK(words == std::vector<std::string>{"vat", "fat", "pat"});
}

TEST_CASE("single-site dub of math yields mat") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  const auto plans = plan_dubs(phonemize("math", lex), PlanMode::SingleSite);
  REQUIRE(plans.size() == 2);  // M site and TH site
  bool found_mat = false;
  for (const auto& plan : plans) {
    for (const Confusion& c : lexical_confusions(enumerate_percepts(plan, 64), lex)) {
      if (c.word == "mat") found_mat = true;
    }
  }
  CHECK(found_mat);
}

TEST_CASE("empty candidate list confuses with nothing") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  CHECK(lexical_confusions({}, lex).empty());
}

TEST_CASE("rules file round-trips and equals builtin") {
  const RuleTable loaded = RuleTable::load(testsupport::data_file("mcgurk_rules.txt"));
  CHECK(loaded.rules() == RuleTable::builtin().rules());

  std::ostringstream out;
  RuleTable::builtin().write(out);
  std::istringstream in(out.str());
  CHECK(RuleTable::parse(in).rules() == RuleTable::builtin().rules());
}

TEST_CASE("rules file validation") {
  std::istringstream missing_field("B | W\n");
  CHECK_THROWS_AS(RuleTable::parse(missing_field), DataError);
  std::istringstream bad_symbol("B | W | QX\n");
  CHECK_THROWS_AS(RuleTable::parse(bad_symbol), DataError);
  std::istringstream self_percept("B | W | B\n");
  CHECK_THROWS_AS(RuleTable::parse(self_percept), DataError);
  std::istringstream duplicate("B | W | V\nB | L | F\n");
  CHECK_THROWS_AS(RuleTable::parse(duplicate), DataError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(RuleTable::parse(empty), DataError);
}

TEST_CASE("JH and ZH form one equivalence class for rule lookup") {
  std::istringstream in("JH | B | B\n");
  const RuleTable table = RuleTable::parse(in);
  CHECK(table.find(JH) != nullptr);
  CHECK(table.find(ZH) != nullptr);  // same class
  CHECK(table.find(ZH)->audio == JH);
}

TEST_CASE("table 2 words split 147 attempted / 53 not") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  std::ifstream in(testsupport::data_file("table2_words.csv"));
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  int attempted = 0, skipped = 0, total = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    ++total;
    if (is_attemptable(phonemize(line.substr(0, comma), lex))) {
      ++attempted;
    } else {
      ++skipped;
    }
  }
  CHECK(total == 200);
  CHECK(attempted == 147);
  CHECK(skipped == 53);
}

TEST_SUITE_END();
