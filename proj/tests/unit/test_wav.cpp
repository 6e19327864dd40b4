#include <doctest.h>

#include <cmath>
#include <sstream>

#include "illusion/audio/wav.hpp"
#include "support/signals.hpp"

using namespace illusion;
using namespace illusion::audio;

namespace {

std::string to_bytes(const AudioClip& clip) {
  std::ostringstream out(std::ios::binary);
  write_wav(out, clip);
  return out.str();
}

AudioClip from_bytes(const std::string& bytes, bool downmix = false) {
  std::istringstream in(bytes, std::ios::binary);
  return parse_wav(in, downmix);
}

// Hand-built WAV with arbitrary format fields.
std::string raw_wav(std::uint16_t format, std::uint16_t channels, std::uint16_t bits,
                    std::uint32_t rate, const std::string& payload) {
  auto u16 = [](std::string& s, std::uint16_t v) {
    s.push_back(static_cast<char>(v & 0xFF));
    s.push_back(static_cast<char>(v >> 8));
  };
  auto u32 = [](std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  };
  std::string out = "RIFF";
  u32(out, static_cast<std::uint32_t>(36 + payload.size()));
  out += "WAVEfmt ";
  u32(out, 16);
  u16(out, format);
  u16(out, channels);
  u32(out, rate);
  u32(out, rate * channels * bits / 8);
  u16(out, static_cast<std::uint16_t>(channels * bits / 8));
  u16(out, bits);
  out += "data";
  u32(out, static_cast<std::uint32_t>(payload.size()));
  out += payload;
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("wav");

TEST_CASE("write/read round trip stays within one quantization step") {
  const AudioClip clip = testsupport::sine_clip(440.0, 0.5, 22050);
  const AudioClip back = from_bytes(to_bytes(clip));
  REQUIRE(back.samples.size() == clip.samples.size());
  CHECK(back.sample_rate == 22050);
  double worst = 0.0;
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    worst = std::max(worst, std::abs(clip.samples[i] - back.samples[i]));
  }
  CHECK(worst <= 2.0 / 32768.0);
}

TEST_CASE("full-scale samples survive the round trip") {
  AudioClip clip;
  clip.sample_rate = 8000;
  clip.samples = {1.0, -1.0, 0.0, 0.999, -0.999};
  const AudioClip back = from_bytes(to_bytes(clip));
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    CHECK(std::abs(clip.samples[i] - back.samples[i]) <= 1.0 / 32768.0);
  }
}

TEST_CASE("stereo needs the downmix flag") {
  // Two channels, one frame: left 16384, right -16384.
  std::string payload;
  payload.push_back('\x00');
  payload.push_back('\x40');
  payload.push_back('\x00');
  payload.push_back('\xC0');
  const std::string bytes = raw_wav(1, 2, 16, 8000, payload);
  CHECK_THROWS_AS(from_bytes(bytes), DataError);
  const AudioClip mixed = from_bytes(bytes, true);
  REQUIRE(mixed.samples.size() == 1);
  CHECK(mixed.samples[0] == doctest::Approx(0.0));
}

TEST_CASE("non-PCM and non-16-bit encodings are rejected") {
  CHECK_THROWS_WITH_AS(from_bytes(raw_wav(3, 1, 16, 8000, std::string(4, '\0'))),
                       doctest::Contains("unsupported encoding"), DataError);
  CHECK_THROWS_WITH_AS(from_bytes(raw_wav(1, 1, 8, 8000, std::string(4, '\0'))),
                       doctest::Contains("unsupported encoding"), DataError);
}

TEST_CASE("truncated files are rejected") {
  const AudioClip clip = testsupport::sine_clip(440.0, 0.1, 8000);
  const std::string bytes = to_bytes(clip);
  CHECK_THROWS_AS(from_bytes(bytes.substr(0, 8)), DataError);
  CHECK_THROWS_AS(from_bytes(bytes.substr(0, bytes.size() / 2)), DataError);
  CHECK_THROWS_AS(from_bytes("JUNKJUNKJUNK"), DataError);
}

TEST_CASE("writer validates the clip") {
  AudioClip empty;
  empty.sample_rate = 8000;
  std::ostringstream out;
  CHECK_THROWS_AS(write_wav(out, empty), DomainError);
}

TEST_SUITE_END();
