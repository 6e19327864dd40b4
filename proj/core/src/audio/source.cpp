#include "illusion/audio/source.hpp"

#include <algorithm>
#include <cstdlib>

namespace illusion::audio {

DirectoryAudioSource::DirectoryAudioSource(std::filesystem::path dir, bool downmix_stereo)
    : dir_(std::move(dir)), downmix_(downmix_stereo) {
  if (!std::filesystem::is_directory(dir_)) {
    throw DataError("audio source directory does not exist: " + dir_.string());
  }
}

bool DirectoryAudioSource::has(const std::string& word) const {
  return std::filesystem::exists(dir_ / (word + ".wav"));
}

AudioClip DirectoryAudioSource::fetch(const std::string& word) const {
  return read_wav(dir_ / (word + ".wav"), downmix_);
}

std::vector<std::string> DirectoryAudioSource::list() const {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wav") {
      out.push_back(entry.path().stem().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CommandAudioSource::CommandAudioSource(std::string command_template,
                                       std::filesystem::path work_dir)
    : command_template_(std::move(command_template)), work_dir_(std::move(work_dir)) {
  if (command_template_.find("{word}") == std::string::npos ||
      command_template_.find("{out}") == std::string::npos) {
    throw DataError("command template must contain {word} and {out} placeholders");
  }
  std::filesystem::create_directories(work_dir_);
}

bool CommandAudioSource::has(const std::string&) const { return true; }

AudioClip CommandAudioSource::fetch(const std::string& word) const {
  // The word lands inside a shell command line; keep it to word characters.
  for (char c : word) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '\'' || c == '-' || c == '_';
    if (!ok) throw DataError("audio source: unsupported character in word \"" + word + "\"");
  }
  const std::filesystem::path out_path = work_dir_ / (word + ".wav");
  std::string command = command_template_;
  auto replace_all = [&command](const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = command.find(from, pos)) != std::string::npos;
         pos += to.size()) {
      command.replace(pos, from.size(), to);
    }
  };
  replace_all("{word}", word);
  replace_all("{out}", out_path.string());
  if (std::system(command.c_str()) != 0) {
    throw DataError("audio source command failed for word \"" + word + "\"");
  }
  return read_wav(out_path);
}

}  // namespace illusion::audio
