#include "illusion/features.hpp"

#include <algorithm>
#include <numeric>

namespace illusion {

namespace {

int phoneme_rank(Phoneme p) {
  auto it = std::find(kIllusionablePhonemes.begin(), kIllusionablePhonemes.end(), p);
  if (it == kIllusionablePhonemes.end()) return -1;
  return static_cast<int>(it - kIllusionablePhonemes.begin());
}

}  // namespace

std::size_t feature_index(Phoneme phoneme, Position position) {
  int rank = phoneme_rank(phoneme);
  if (rank < 0) {
    throw DomainError("feature_index: " + std::string(to_string(phoneme)) +
                      " is not an illusionable phoneme");
  }
  return static_cast<std::size_t>(rank) * 3 + static_cast<std::size_t>(position);
}

const std::array<std::string, kIllusionFeatureCount>& feature_names() {
  static const auto names = [] {
    std::array<std::string, kIllusionFeatureCount> out;
    for (Phoneme p : kIllusionablePhonemes) {
      for (Position pos : {Position::Initial, Position::Medial, Position::Final}) {
        out[feature_index(p, pos)] =
            std::string(to_string(p)) + "@" + std::string(to_string(pos));
      }
    }
    return out;
  }();
  return names;
}

bool IllusionFeatureVector::any() const {
  return std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; });
}

std::size_t IllusionFeatureVector::count() const {
  return static_cast<std::size_t>(std::accumulate(bits.begin(), bits.end(), 0));
}

std::vector<std::string> IllusionFeatureVector::set_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(feature_names()[i]);
  }
  return out;
}

IllusionFeatureVector extract_features(const Pronunciation& pron) {
  IllusionFeatureVector vec;
  vec.word = pron.word;
  for (std::size_t i = 0; i < pron.phonemes.size(); ++i) {
    if (phoneme_rank(pron.phonemes[i]) < 0) continue;
    vec.bits[feature_index(pron.phonemes[i], position_of(pron, i))] = 1;
  }
  return vec;
}

std::string to_json_list(const IllusionFeatureVector& features) {
  std::string out = "[";
  bool first = true;
  for (const std::string& name : features.set_names()) {
    if (!first) out += ',';
    out += '"' + name + '"';
    first = false;
  }
  out += ']';
  return out;
}

}  // namespace illusion
