#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "illusion/common.hpp"

namespace illusion {

// Fixed 44-symbol American English inventory in ARPAbet codes: 20 vowels and
// 24 consonants. Covers the CMU dictionary symbol set plus the reduced /
// r-colored vowels of the extended ARPAbet so the count matches the full
// phonemic chart.
enum class Phoneme : std::uint8_t {
  // vowels
  AA, AE, AH, AO, AW, AX, AXR, AY, EH, ER, EY, IH, IX, IY, OH, OW, OY, UH, UW, UX,
  // consonants
  B, CH, D, DH, F, G, HH, JH, K, L, M, N, NG, P, R, S, SH, T, TH, V, W, Y, Z, ZH,
};

inline constexpr int kPhonemeCount = 44;
inline constexpr int kVowelCount = 20;
inline constexpr int kConsonantCount = 24;

enum class PhonemeClass { Vowel, Consonant };

std::string_view to_string(Phoneme p);
PhonemeClass phoneme_class(Phoneme p);
inline bool is_vowel(Phoneme p) { return phoneme_class(p) == PhonemeClass::Vowel; }

// Parses an ARPAbet code; a trailing 0/1/2 stress digit on vowels is accepted
// and stripped. Returns nullopt for symbols outside the inventory.
std::optional<Phoneme> parse_phoneme(std::string_view token);

// Phoneme sequence of one word as spoken.
struct Pronunciation {
  std::string word;              // lowercase
  std::vector<Phoneme> phonemes; // nonempty

  bool operator==(const Pronunciation&) const = default;
};

std::string to_string(const std::vector<Phoneme>& phonemes);  // "B AE T"

// Position class of a phoneme within a word: first, last, or surrounded.
enum class Position : std::uint8_t { Initial, Medial, Final };

std::string_view to_string(Position pos);

// Initial iff index 0; final iff last index of a multi-phoneme word; medial
// otherwise. A single-phoneme word classifies as initial.
Position position_of(const Pronunciation& pron, std::size_t index);

// Lowercases and strips surrounding (not interior) punctuation: "Bat," -> "bat".
std::string normalize_word(std::string_view raw);

struct LexiconStats {
  std::size_t lines = 0;
  std::size_t entries = 0;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;  // first few skip reasons
};

// Word -> pronunciations table plus the inverse phoneme-sequence -> words
// index. Immutable once loaded; safe for concurrent reads.
class PronunciationLexicon {
public:
  void add(Pronunciation pron);

  const std::vector<Pronunciation>* find(const std::string& word) const;
  bool contains(const std::string& word) const { return find(word) != nullptr; }

  // Words whose (first or variant) pronunciation is exactly this sequence,
  // sorted alphabetically.
  const std::vector<std::string>* words_for(const std::vector<Phoneme>& phonemes) const;

  std::size_t word_count() const { return entries_.size(); }
  std::size_t entry_count() const;
  const std::map<std::string, std::vector<Pronunciation>>& entries() const { return entries_; }

  // Serializes back to the lexicon file format (variants get a "(n)" suffix).
  void write(std::ostream& out) const;

  const LexiconStats& stats() const { return stats_; }
  LexiconStats& stats() { return stats_; }

private:
  static std::string index_key(const std::vector<Phoneme>& phonemes);

  std::map<std::string, std::vector<Pronunciation>> entries_;
  std::unordered_map<std::string, std::vector<std::string>> reverse_;
  LexiconStats stats_;
};

// Lexicon file format (CMU style):
//
//   WORD  PH1 PH2 ...          one entry per line, any whitespace separated
//   WORD(2)  PH1 ...           alternate pronunciation
//   ;;; comment
//
// Vowel stress digits (AE1, AH0, ...) are stripped. Lines with symbols
// outside the inventory are skipped with a warning, not fatal.
PronunciationLexicon parse_lexicon(std::istream& in);
PronunciationLexicon load_lexicon(const std::filesystem::path& path);

// First listed pronunciation of the normalized word; throws OovError if absent.
Pronunciation phonemize(const std::string& word, const PronunciationLexicon& lexicon);

}  // namespace illusion
