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

#ifndef SPATAUDIO_AUDIO_AUDIO_BUFFER_H_
#define SPATAUDIO_AUDIO_AUDIO_BUFFER_H_

#include <cstddef>
#include <vector>

namespace spataudio {

using Signal = std::vector<double>;

// Planar audio. Samples are nominally in [-1, 1] but are not clamped until
// they are written as 16-bit PCM.
struct AudioBuffer {
  int sample_rate = 0;
  std::vector<Signal> channels;

  AudioBuffer() = default;
  AudioBuffer(int rate, std::vector<Signal> chans)
      : sample_rate(rate), channels(std::move(chans)) {}

  static AudioBuffer Mono(int rate, Signal samples);
  static AudioBuffer Stereo(int rate, Signal left, Signal right);

  std::size_t num_channels() const { return channels.size(); }
  std::size_t num_frames() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(num_frames()) / sample_rate
                           : 0.0;
  }

  // Throws a validation error unless the rate is positive, there are one or
  // two channels, and all channels have equal length.
  void Validate() const;

  bool operator==(const AudioBuffer&) const = default;
};

// Largest absolute sample over all channels.
double Peak(const AudioBuffer& buffer);

// Mono input is duplicated into both channels; stereo is returned unchanged.
AudioBuffer ToDualMono(const AudioBuffer& buffer);

// Averages the channels of a stereo buffer.
AudioBuffer ToMono(const AudioBuffer& buffer);

}  // namespace spataudio

#endif  // SPATAUDIO_AUDIO_AUDIO_BUFFER_H_
