#include "illusion/phoneme.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace illusion {

namespace {

struct InventoryEntry {
  std::string_view symbol;
  PhonemeClass klass;
};

constexpr std::array<InventoryEntry, kPhonemeCount> kInventory = {{
    {"AA", PhonemeClass::Vowel},   {"AE", PhonemeClass::Vowel},
    {"AH", PhonemeClass::Vowel},   {"AO", PhonemeClass::Vowel},
    {"AW", PhonemeClass::Vowel},   {"AX", PhonemeClass::Vowel},
    {"AXR", PhonemeClass::Vowel},  {"AY", PhonemeClass::Vowel},
    {"EH", PhonemeClass::Vowel},   {"ER", PhonemeClass::Vowel},
    {"EY", PhonemeClass::Vowel},   {"IH", PhonemeClass::Vowel},
    {"IX", PhonemeClass::Vowel},   {"IY", PhonemeClass::Vowel},
    {"OH", PhonemeClass::Vowel},   {"OW", PhonemeClass::Vowel},
    {"OY", PhonemeClass::Vowel},   {"UH", PhonemeClass::Vowel},
    {"UW", PhonemeClass::Vowel},   {"UX", PhonemeClass::Vowel},
    {"B", PhonemeClass::Consonant},  {"CH", PhonemeClass::Consonant},
    {"D", PhonemeClass::Consonant},  {"DH", PhonemeClass::Consonant},
    {"F", PhonemeClass::Consonant},  {"G", PhonemeClass::Consonant},
    {"HH", PhonemeClass::Consonant}, {"JH", PhonemeClass::Consonant},
    {"K", PhonemeClass::Consonant},  {"L", PhonemeClass::Consonant},
    {"M", PhonemeClass::Consonant},  {"N", PhonemeClass::Consonant},
    {"NG", PhonemeClass::Consonant}, {"P", PhonemeClass::Consonant},
    {"R", PhonemeClass::Consonant},  {"S", PhonemeClass::Consonant},
    {"SH", PhonemeClass::Consonant}, {"T", PhonemeClass::Consonant},
    {"TH", PhonemeClass::Consonant}, {"V", PhonemeClass::Consonant},
    {"W", PhonemeClass::Consonant},  {"Y", PhonemeClass::Consonant},
    {"Z", PhonemeClass::Consonant},  {"ZH", PhonemeClass::Consonant},
}};

constexpr std::size_t kMaxWarnings = 20;

}  // namespace

std::string_view to_string(Phoneme p) {
  return kInventory[static_cast<std::size_t>(p)].symbol;
}

PhonemeClass phoneme_class(Phoneme p) {
  return kInventory[static_cast<std::size_t>(p)].klass;
}

std::optional<Phoneme> parse_phoneme(std::string_view token) {
  // Strip one trailing stress digit (CMU dictionaries mark vowels AE1, AH0...).
  if (!token.empty() && token.back() >= '0' && token.back() <= '2') {
    token.remove_suffix(1);
  }
  for (std::size_t i = 0; i < kInventory.size(); ++i) {
    if (kInventory[i].symbol == token) return static_cast<Phoneme>(i);
  }
  return std::nullopt;
}

std::string to_string(const std::vector<Phoneme>& phonemes) {
  std::string out;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (i) out += ' ';
    out += to_string(phonemes[i]);
  }
  return out;
}

std::string_view to_string(Position pos) {
  switch (pos) {
    case Position::Initial: return "initial";
    case Position::Medial: return "medial";
    case Position::Final: return "final";
  }
  return "?";
}

Position position_of(const Pronunciation& pron, std::size_t index) {
  if (index >= pron.phonemes.size()) {
    throw DomainError("position_of: index " + std::to_string(index) +
                      " out of bounds for \"" + pron.word + "\"");
  }
  if (index == 0) return Position::Initial;
  if (index + 1 == pron.phonemes.size()) return Position::Final;
  return Position::Medial;
}

std::string normalize_word(std::string_view raw) {
  auto is_word_char = [](unsigned char c) { return std::isalnum(c) != 0; };
  while (!raw.empty() && !is_word_char(static_cast<unsigned char>(raw.front()))) {
    raw.remove_prefix(1);
  }
  while (!raw.empty() && !is_word_char(static_cast<unsigned char>(raw.back()))) {
    raw.remove_suffix(1);
  }
  return to_lower(raw);
}

void PronunciationLexicon::add(Pronunciation pron) {
  if (pron.word.empty()) throw DomainError("lexicon entry with empty word");
  if (pron.phonemes.empty()) {
    throw DomainError("lexicon entry with no phonemes: " + pron.word);
  }
  auto& words = reverse_[index_key(pron.phonemes)];
  if (std::find(words.begin(), words.end(), pron.word) == words.end()) {
    words.insert(std::upper_bound(words.begin(), words.end(), pron.word), pron.word);
  }
  entries_[pron.word].push_back(std::move(pron));
}

const std::vector<Pronunciation>* PronunciationLexicon::find(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<std::string>* PronunciationLexicon::words_for(
    const std::vector<Phoneme>& phonemes) const {
  auto it = reverse_.find(index_key(phonemes));
  return it == reverse_.end() ? nullptr : &it->second;
}

std::size_t PronunciationLexicon::entry_count() const {
  std::size_t n = 0;
  for (const auto& [word, prons] : entries_) n += prons.size();
  return n;
}

std::string PronunciationLexicon::index_key(const std::vector<Phoneme>& phonemes) {
  std::string key;
  key.reserve(phonemes.size());
  for (Phoneme p : phonemes) key.push_back(static_cast<char>(p));
  return key;
}

void PronunciationLexicon::write(std::ostream& out) const {
  for (const auto& [word, prons] : entries_) {
    for (std::size_t i = 0; i < prons.size(); ++i) {
      out << word;
      if (i > 0) out << '(' << i + 1 << ')';
      out << "  " << to_string(prons[i].phonemes) << '\n';
    }
  }
}

PronunciationLexicon parse_lexicon(std::istream& in) {
  PronunciationLexicon lexicon;
  LexiconStats& stats = lexicon.stats();
  std::string line;
  while (std::getline(in, line)) {
    ++stats.lines;
    std::string_view view = trim(line);
    if (view.empty() || view.substr(0, 3) == ";;;") continue;

    auto skip = [&](const std::string& reason) {
      ++stats.skipped;
      if (stats.warnings.size() < kMaxWarnings) {
        stats.warnings.push_back("line " + std::to_string(stats.lines) + ": " + reason);
      }
    };

    std::vector<std::string> tokens = split_whitespace(view);
    if (tokens.size() < 2) {
      skip("expected WORD followed by phonemes");
      continue;
    }

    std::string word = to_lower(tokens[0]);
    // Alternate pronunciations carry a "(n)" suffix on the word.
    if (auto paren = word.find('('); paren != std::string::npos) {
      word.erase(paren);
    }
    if (word.empty()) {
      skip("empty word token");
      continue;
    }

    std::vector<Phoneme> phonemes;
    phonemes.reserve(tokens.size() - 1);
    bool ok = true;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto p = parse_phoneme(tokens[i]);
      if (!p) {
        skip("unknown phoneme symbol \"" + tokens[i] + "\"");
        ok = false;
        break;
      }
      phonemes.push_back(*p);
    }
    if (!ok) continue;

    lexicon.add({std::move(word), std::move(phonemes)});
    ++stats.entries;
  }
  if (stats.entries == 0) {
    throw DataError("lexicon contains zero valid entries");
  }
  return lexicon;
}

PronunciationLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read lexicon file: " + path.string());
  PronunciationLexicon lexicon = parse_lexicon(in);
  if (lexicon.stats().skipped > 0) {
    log_warning("lexicon " + path.string() + ": skipped " +
                std::to_string(lexicon.stats().skipped) + " malformed line(s)");
  }
  return lexicon;
}

Pronunciation phonemize(const std::string& word, const PronunciationLexicon& lexicon) {
  const std::string normalized = normalize_word(word);
  if (normalized.empty()) throw OovError(word);
  const auto* prons = lexicon.find(normalized);
  if (!prons || prons->empty()) throw OovError(normalized);
  return prons->front();
}

}  // namespace illusion
