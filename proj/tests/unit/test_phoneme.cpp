#include <doctest.h>

#include <sstream>

#include "illusion/phoneme.hpp"
#include "support/paths.hpp"

using namespace illusion;

TEST_SUITE_BEGIN("phoneme");

TEST_CASE("inventory has 44 symbols, 20 vowels and 24 consonants") {
  int vowels = 0, consonants = 0;
  for (int i = 0; i < kPhonemeCount; ++i) {
    const auto p = static_cast<Phoneme>(i);
    CHECK(parse_phoneme(to_string(p)) == p);
    (phoneme_class(p) == PhonemeClass::Vowel ? vowels : consonants) += 1;
  }
  CHECK(vowels == 20);
  CHECK(consonants == 24);
}

TEST_CASE("parse_phoneme strips vowel stress digits") {
  CHECK(parse_phoneme("AE1") == Phoneme::AE);
  CHECK(parse_phoneme("AH0") == Phoneme::AH);
  CHECK(parse_phoneme("UW2") == Phoneme::UW);
  CHECK(parse_phoneme("B") == Phoneme::B);
  CHECK_FALSE(parse_phoneme("QX").has_value());
  CHECK_FALSE(parse_phoneme("").has_value());
}

TEST_CASE("lexicon line parses directly") {
  std::istringstream in("BAT  B AE T\n");
  auto lex = parse_lexicon(in);
  const auto pron = phonemize("bat", lex);
  CHECK(pron.phonemes == std::vector<Phoneme>{Phoneme::B, Phoneme::AE, Phoneme::T});
}

TEST_CASE("variant suffix keeps both pronunciations, first listed wins") {
  std::istringstream in("READ  R IY D\nREAD(2)  R EH D\n");
  auto lex = parse_lexicon(in);
  const auto* prons = lex.find("read");
  REQUIRE(prons != nullptr);
  CHECK(prons->size() == 2);
  CHECK(phonemize("read", lex).phonemes ==
        std::vector<Phoneme>{Phoneme::R, Phoneme::IY, Phoneme::D});
  CHECK((*prons)[1].phonemes == std::vector<Phoneme>{Phoneme::R, Phoneme::EH, Phoneme::D});
}

TEST_CASE("empty file is an error") {
  std::istringstream in("");
  CHECK_THROWS_AS(parse_lexicon(in), DataError);
}

TEST_CASE("unknown symbols skip the line without killing the load") {
  std::istringstream in("GOOD  G UH D\nBAD  B QQ D\n;;; comment\nALSO  AO L S OW\n");
  auto lex = parse_lexicon(in);
  CHECK(lex.word_count() == 2);
  CHECK(lex.stats().skipped == 1);
  CHECK(lex.stats().entries == 2);
}

TEST_CASE("phonemize normalizes case and surrounding punctuation") {
  std::istringstream in("BAT  B AE T\nI'M  AY M\n");
  auto lex = parse_lexicon(in);
  CHECK(phonemize("Bat,", lex).word == "bat");
  CHECK(phonemize("\"BAT!\"", lex).word == "bat");
  CHECK(phonemize("I'm", lex).word == "i'm");  // interior apostrophe survives
  CHECK_THROWS_AS(phonemize("zzxqy", lex), OovError);
  try {
    phonemize("zzxqy", lex);
  } catch (const OovError& e) {
    CHECK(e.word() == "zzxqy");
  }
}

TEST_CASE("position classes") {
  Pronunciation bat{"bat", {Phoneme::B, Phoneme::AE, Phoneme::T}};
  CHECK(position_of(bat, 0) == Position::Initial);
  CHECK(position_of(bat, 1) == Position::Medial);
  CHECK(position_of(bat, 2) == Position::Final);
  CHECK_THROWS_AS(position_of(bat, 3), DomainError);

  Pronunciation ah{"ah", {Phoneme::AH}};
  CHECK(position_of(ah, 0) == Position::Initial);
}

TEST_CASE("every pronunciation has one initial, one final, rest medial") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  for (const auto& [word, prons] : lex.entries()) {
    for (const Pronunciation& pron : prons) {
      if (pron.phonemes.size() < 2) continue;
      int initial = 0, medial = 0, final = 0;
      for (std::size_t i = 0; i < pron.phonemes.size(); ++i) {
        switch (position_of(pron, i)) {
          case Position::Initial: ++initial; break;
          case Position::Medial: ++medial; break;
          case Position::Final: ++final; break;
        }
      }
      CHECK(initial == 1);
      CHECK(final == 1);
      CHECK(medial == static_cast<int>(pron.phonemes.size()) - 2);
    }
  }
}

TEST_CASE("bundled lexicon round-trips through the reverse index") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  CHECK(lex.stats().skipped == 0);
  for (const auto& [word, prons] : lex.entries()) {
    const auto pron = phonemize(word, lex);
    const auto* words = lex.words_for(pron.phonemes);
    REQUIRE(words != nullptr);
    CHECK(std::find(words->begin(), words->end(), word) != words->end());
  }
}

TEST_CASE("parse then serialize preserves the entry multiset") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  std::ostringstream serialized;
  lex.write(serialized);
  std::istringstream in(serialized.str());
  auto reparsed = parse_lexicon(in);

  CHECK(reparsed.word_count() == lex.word_count());
  CHECK(reparsed.entry_count() == lex.entry_count());
  for (const auto& [word, prons] : lex.entries()) {
    const auto* other = reparsed.find(word);
    REQUIRE(other != nullptr);
    REQUIRE(other->size() == prons.size());
    for (std::size_t i = 0; i < prons.size(); ++i) {
      CHECK((*other)[i].phonemes == prons[i].phonemes);  // variant order preserved
    }
  }
}

TEST_CASE("expected pronunciations from the bundled lexicon") {
  auto lex = load_lexicon(testsupport::data_file("lexicon.dict"));
  using enum Phoneme;
  CHECK(phonemize("worlds", lex).phonemes == std::vector<Phoneme>{W, ER, L, D, Z});
  CHECK(phonemize("bob", lex).phonemes == std::vector<Phoneme>{B, AA, B});
  CHECK(phonemize("see", lex).phonemes == std::vector<Phoneme>{S, IY});
}

TEST_SUITE_END();
