// Copyright 2026 The Spataudio Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spataudio/audio/wav.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <optional>
#include <string>

#include "spataudio/error.h"
#include "spataudio/file_util.h"

namespace spataudio {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

// Little-endian cursor over the container bytes.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::size_t position() const { return pos_; }

  std::uint32_t U32() {
    Need(4);
    std::uint32_t v = static_cast<std::uint32_t>(bytes_[pos_]) |
                      static_cast<std::uint32_t>(bytes_[pos_ + 1]) << 8 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 2]) << 16 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 3]) << 24;
    pos_ += 4;
    return v;
  }
  std::uint16_t U16() {
    Need(2);
    std::uint16_t v = static_cast<std::uint16_t>(
        bytes_[pos_] | static_cast<std::uint16_t>(bytes_[pos_ + 1]) << 8);
    pos_ += 2;
    return v;
  }
  std::string Tag() {
    Need(4);
    std::string t(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return t;
  }
  std::span<const std::uint8_t> Take(std::size_t n) {
    Need(n);
    auto s = bytes_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  void Skip(std::size_t n) {
    Need(n);
    pos_ += n;
  }

 private:
  void Need(std::size_t n) const {
    if (remaining() < n) {
      throw ParseError("truncated WAV container at byte " +
                       std::to_string(pos_));
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

FormatChunk ParseFormat(std::span<const std::uint8_t> body) {
  if (body.size() < 16) throw ParseError("fmt chunk shorter than 16 bytes");
  Reader r(body);
  FormatChunk f;
  f.format = r.U16();
  f.channels = r.U16();
  f.sample_rate = r.U32();
  r.U32();  // byte rate
  r.U16();  // block align
  f.bits = r.U16();
  if (f.format == kFormatExtensible) {
    if (body.size() < 40) throw ParseError("extensible fmt chunk too short");
    r.U16();  // cbSize
    r.U16();  // valid bits
    r.U32();  // channel mask
    f.format = r.U16();  // first two bytes of the sub-format GUID
  }
  return f;
}

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}
void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
  }
}
void PutTag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

std::int16_t ToPcm16(double v) {
  constexpr double kMax = 1.0 - 1.0 / 32768.0;
  double c = std::clamp(v, -1.0, kMax);
  if (std::isnan(v)) c = 0.0;
  return static_cast<std::int16_t>(std::lround(c * 32768.0));
}

}  // namespace

AudioBuffer ReadWav(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  if (r.remaining() < 12) throw ParseError("truncated WAV header");
  if (r.Tag() != "RIFF") throw FormatError("missing RIFF signature");
  r.U32();  // RIFF size; trailing bytes beyond it are tolerated
  if (r.Tag() != "WAVE") throw FormatError("missing WAVE signature");

  std::optional<FormatChunk> fmt;
  std::optional<std::span<const std::uint8_t>> data;
  while (r.remaining() >= 8 && !data) {
    std::string tag = r.Tag();
    std::uint32_t size = r.U32();
    if (tag == "fmt ") {
      fmt = ParseFormat(r.Take(size));
    } else if (tag == "data") {
      data = r.Take(size);
    } else {
      r.Skip(size);
    }
    if (size % 2 == 1 && r.remaining() > 0) r.Skip(1);
  }
  if (!fmt) throw ParseError("WAV has no fmt chunk before data");
  if (!data) throw ParseError("WAV has no data chunk");

  if (fmt->channels < 1 || fmt->channels > 2) {
    throw FormatError("unsupported channel count " +
                      std::to_string(fmt->channels));
  }
  const bool pcm16 = fmt->format == kFormatPcm && fmt->bits == 16;
  const bool float32 = fmt->format == kFormatFloat && fmt->bits == 32;
  if (!pcm16 && !float32) {
    throw FormatError("unsupported WAV encoding (format " +
                      std::to_string(fmt->format) + ", " +
                      std::to_string(fmt->bits) + " bits)");
  }
  if (fmt->sample_rate == 0) throw FormatError("sample rate is zero");

  const std::size_t bytes_per_sample = fmt->bits / 8;
  const std::size_t frame_bytes = bytes_per_sample * fmt->channels;
  if (data->size() % frame_bytes != 0) {
    throw ParseError("data chunk is not a whole number of frames");
  }
  const std::size_t frames = data->size() / frame_bytes;

  AudioBuffer out;
  out.sample_rate = static_cast<int>(fmt->sample_rate);
  out.channels.assign(fmt->channels, Signal(frames));
  Reader d(*data);
  for (std::size_t i = 0; i < frames; ++i) {
    for (std::size_t c = 0; c < fmt->channels; ++c) {
      if (pcm16) {
        auto n = static_cast<std::int16_t>(d.U16());
        out.channels[c][i] = n / 32768.0;
      } else {
        out.channels[c][i] = std::bit_cast<float>(d.U32());
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> WriteWav(const AudioBuffer& buffer,
                                   WavEncoding encoding) {
  buffer.Validate();
  const bool pcm16 = encoding == WavEncoding::kPcm16;
  const std::uint16_t channels =
      static_cast<std::uint16_t>(buffer.num_channels());
  const std::uint16_t bits = pcm16 ? 16 : 32;
  const std::uint16_t block_align = channels * (bits / 8);
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(buffer.num_frames() * block_align);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  PutTag(out, "RIFF");
  PutU32(out, 36 + data_bytes);
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, pcm16 ? kFormatPcm : kFormatFloat);
  PutU16(out, channels);
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate));
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate) * block_align);
  PutU16(out, block_align);
  PutU16(out, bits);
  PutTag(out, "data");
  PutU32(out, data_bytes);
  for (std::size_t i = 0; i < buffer.num_frames(); ++i) {
    for (const Signal& c : buffer.channels) {
      if (pcm16) {
        PutU16(out, static_cast<std::uint16_t>(ToPcm16(c[i])));
      } else {
        PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(c[i])));
      }
    }
  }
  return out;
}

AudioBuffer ReadWavFile(const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  try {
    return ReadWav(bytes);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void WriteWavFile(const std::filesystem::path& path, const AudioBuffer& buffer,
                  WavEncoding encoding) {
  WriteFileAtomic(path, WriteWav(buffer, encoding));
}

}  // namespace spataudio
