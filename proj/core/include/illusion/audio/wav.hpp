#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "illusion/common.hpp"

namespace illusion::audio {

// Mono audio, samples normalized to [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// 16-bit PCM WAV only. Stereo input is an error unless downmix_stereo is set,
// in which case channels average. Round-tripping write/read stays within one
// quantization step (1/32768) per sample.
AudioClip read_wav(const std::filesystem::path& path, bool downmix_stereo = false);
AudioClip parse_wav(std::istream& in, bool downmix_stereo = false);

void write_wav(const std::filesystem::path& path, const AudioClip& clip);
void write_wav(std::ostream& out, const AudioClip& clip);

}  // namespace illusion::audio
