#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "illusion/phoneme.hpp"

namespace illusion {

// The ten phonemes with substitution rules, in fixed rank order (alphabetical
// by ARPAbet code). Together with the three position classes they define the
// 30-dimensional feature space of the word-level predictor.
inline constexpr std::array<Phoneme, 10> kIllusionablePhonemes = {
    Phoneme::B, Phoneme::D, Phoneme::DH, Phoneme::F, Phoneme::L,
    Phoneme::M, Phoneme::P, Phoneme::TH, Phoneme::V, Phoneme::W,
};

inline constexpr std::size_t kIllusionFeatureCount = kIllusionablePhonemes.size() * 3;

// 3*rank(phoneme) + rank(position), bijective onto 0..29. Throws DomainError
// for phonemes outside the illusionable set.
std::size_t feature_index(Phoneme phoneme, Position position);

// "B@initial", "B@medial", ..., "W@final" in feature_index order.
const std::array<std::string, kIllusionFeatureCount>& feature_names();

// Binary presence of each (phoneme, position class) pair in a word.
struct IllusionFeatureVector {
  std::string word;
  std::array<std::uint8_t, kIllusionFeatureCount> bits{};

  bool any() const;
  std::size_t count() const;
  std::vector<std::string> set_names() const;

  bool operator==(const IllusionFeatureVector&) const = default;
};

IllusionFeatureVector extract_features(const Pronunciation& pron);

// Report serialization of the set feature names: ["B@initial","B@final"].
std::string to_json_list(const IllusionFeatureVector& features);

}  // namespace illusion
