#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "illusion/audio/wav.hpp"

namespace illusion::audio {

// Supplier of per-word audio. Synthesis itself (e.g. a cloud TTS voice) is
// outside this toolkit; implementations only hand back prepared clips.
class AudioSource {
public:
  virtual ~AudioSource() = default;
  virtual bool has(const std::string& word) const = 0;
  virtual AudioClip fetch(const std::string& word) const = 0;
};

// Directory of pre-synthesized `<dir>/<word>.wav` files.
class DirectoryAudioSource final : public AudioSource {
public:
  explicit DirectoryAudioSource(std::filesystem::path dir, bool downmix_stereo = false);

  bool has(const std::string& word) const override;
  AudioClip fetch(const std::string& word) const override;

  // Words available in the directory, sorted.
  std::vector<std::string> list() const;

private:
  std::filesystem::path dir_;
  bool downmix_;
};

// Runs an external synthesis command per word; the template's {word} and
// {out} placeholders expand to the word and a WAV path the command must
// write. No network client lives here, only the process invocation.
class CommandAudioSource final : public AudioSource {
public:
  CommandAudioSource(std::string command_template, std::filesystem::path work_dir);

  bool has(const std::string& word) const override;
  AudioClip fetch(const std::string& word) const override;

private:
  std::string command_template_;
  std::filesystem::path work_dir_;
};

}  // namespace illusion::audio
