#include "illusion/audio/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace illusion::audio {

namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace

AudioClip parse_wav(std::istream& in, bool downmix_stereo) {
  std::array<unsigned char, 12> riff{};
  if (!in.read(reinterpret_cast<char*>(riff.data()), riff.size())) {
    throw DataError("WAV: truncated RIFF header");
  }
  if (std::memcmp(riff.data(), "RIFF", 4) != 0 || std::memcmp(riff.data() + 8, "WAVE", 4) != 0) {
    throw DataError("WAV: not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  std::vector<unsigned char> payload;
  bool have_data = false;

  std::array<unsigned char, 8> header{};
  while (in.read(reinterpret_cast<char*>(header.data()), header.size())) {
    const std::uint32_t chunk_size = read_u32(header.data() + 4);
    if (std::memcmp(header.data(), "fmt ", 4) == 0) {
      if (chunk_size < 16) throw DataError("WAV: fmt chunk too small");
      std::vector<unsigned char> fmt(chunk_size);
      if (!in.read(reinterpret_cast<char*>(fmt.data()), chunk_size)) {
        throw DataError("WAV: truncated fmt chunk");
      }
      format = read_u16(fmt.data());
      channels = read_u16(fmt.data() + 2);
      sample_rate = read_u32(fmt.data() + 4);
      bits = read_u16(fmt.data() + 14);
      have_fmt = true;
    } else if (std::memcmp(header.data(), "data", 4) == 0) {
      payload.resize(chunk_size);
      if (!in.read(reinterpret_cast<char*>(payload.data()), chunk_size)) {
        throw DataError("WAV: truncated data chunk");
      }
      have_data = true;
    } else {
      in.ignore(chunk_size);
    }
    if (chunk_size % 2 == 1) in.ignore(1);  // chunks are word-aligned
  }

  if (!have_fmt || !have_data) throw DataError("WAV: missing fmt or data chunk");
  if (format != kFormatPcm) {
    throw DataError("WAV: unsupported encoding (only PCM is supported)");
  }
  if (bits != 16) {
    throw DataError("WAV: unsupported encoding (" + std::to_string(bits) +
                    "-bit; only 16-bit PCM is supported)");
  }
  if (channels == 0) throw DataError("WAV: zero channels");
  if (channels > 1 && !downmix_stereo) {
    throw DataError("WAV: " + std::to_string(channels) +
                    " channels; pass the downmix option or provide mono input");
  }
  if (sample_rate == 0) throw DataError("WAV: zero sample rate");

  const std::size_t frame_bytes = static_cast<std::size_t>(channels) * 2;
  if (payload.size() % frame_bytes != 0) throw DataError("WAV: data size not frame-aligned");
  const std::size_t frames = payload.size() / frame_bytes;
  if (frames == 0) throw DataError("WAV: empty data chunk");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(sample_rate);
  clip.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t c = 0; c < channels; ++c) {
      const unsigned char* p = payload.data() + f * frame_bytes + c * 2;
      const auto raw = static_cast<std::int16_t>(read_u16(p));
      acc += static_cast<double>(raw) / 32768.0;
    }
    clip.samples[f] = acc / channels;
  }
  return clip;
}

AudioClip read_wav(const std::filesystem::path& path, bool downmix_stereo) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read WAV file: " + path.string());
  return parse_wav(in, downmix_stereo);
}

void write_wav(std::ostream& out, const AudioClip& clip) {
  if (clip.samples.empty()) throw DomainError("write_wav: empty clip");
  if (clip.sample_rate <= 0) throw DomainError("write_wav: bad sample rate");

  std::string data;
  data.reserve(clip.samples.size() * 2);
  std::size_t clipped = 0;
  for (double s : clip.samples) {
    double scaled = std::lround(s * 32768.0);
    if (scaled > 32767.0) {
      scaled = 32767.0;
      if (s > 1.0) ++clipped;
    } else if (scaled < -32768.0) {
      scaled = -32768.0;
      ++clipped;
    }
    put_u16(data, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
  }
  if (clipped > 0) {
    log_warning("write_wav: clipped " + std::to_string(clipped) + " sample(s)");
  }

  const auto rate = static_cast<std::uint32_t>(clip.sample_rate);
  std::string header;
  header += "RIFF";
  put_u32(header, static_cast<std::uint32_t>(36 + data.size()));
  header += "WAVEfmt ";
  put_u32(header, 16);
  put_u16(header, kFormatPcm);
  put_u16(header, 1);  // mono
  put_u32(header, rate);
  put_u32(header, rate * 2);  // byte rate
  put_u16(header, 2);         // block align
  put_u16(header, 16);        // bits per sample
  header += "data";
  put_u32(header, static_cast<std::uint32_t>(data.size()));

  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw DataError("write_wav: stream write failed");
}

void write_wav(const std::filesystem::path& path, const AudioClip& clip) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open WAV file for writing: " + path.string());
  write_wav(out, clip);
}

}  // namespace illusion::audio
