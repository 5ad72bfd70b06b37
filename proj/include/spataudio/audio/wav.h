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

#ifndef SPATAUDIO_AUDIO_WAV_H_
#define SPATAUDIO_AUDIO_WAV_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "spataudio/audio/audio_buffer.h"

namespace spataudio {

enum class WavEncoding {
  kPcm16,
  kFloat32,
};

// Decodes a RIFF/WAVE container holding 16-bit PCM or 32-bit IEEE float with
// one or two channels. WAVE_FORMAT_EXTENSIBLE is accepted when its sub-format
// is one of those two. 16-bit sample n decodes to n / 32768.
AudioBuffer ReadWav(std::span<const std::uint8_t> bytes);

// 16-bit encoding clamps to [-1, 1 - 2^-15] and rounds to the nearest integer
// without dither. Float32 encoding narrows each sample to float.
std::vector<std::uint8_t> WriteWav(const AudioBuffer& buffer,
                                   WavEncoding encoding);

AudioBuffer ReadWavFile(const std::filesystem::path& path);

// Writes through a temporary sibling file and renames on success, so a failed
// write never leaves a partial file at `path`.
void WriteWavFile(const std::filesystem::path& path, const AudioBuffer& buffer,
                  WavEncoding encoding);

}  // namespace spataudio

#endif  // SPATAUDIO_AUDIO_WAV_H_
