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

#include "spataudio/audio/audio_buffer.h"

#include <cmath>
#include <string>

#include "spataudio/error.h"

namespace spataudio {

AudioBuffer AudioBuffer::Mono(int rate, Signal samples) {
  std::vector<Signal> chans;
  chans.push_back(std::move(samples));
  return AudioBuffer(rate, std::move(chans));
}

AudioBuffer AudioBuffer::Stereo(int rate, Signal left, Signal right) {
  std::vector<Signal> chans;
  chans.push_back(std::move(left));
  chans.push_back(std::move(right));
  return AudioBuffer(rate, std::move(chans));
}

void AudioBuffer::Validate() const {
  if (sample_rate <= 0) {
    throw ValidationError("sample rate must be positive, got " +
                          std::to_string(sample_rate));
  }
  if (channels.empty() || channels.size() > 2) {
    throw ValidationError("expected 1 or 2 channels, got " +
                          std::to_string(channels.size()));
  }
  for (const Signal& c : channels) {
    if (c.size() != channels.front().size()) {
      throw ValidationError("channels have unequal lengths");
    }
  }
}

double Peak(const AudioBuffer& buffer) {
  double peak = 0.0;
  for (const Signal& c : buffer.channels) {
    for (double v : c) peak = std::max(peak, std::abs(v));
  }
  return peak;
}

AudioBuffer ToDualMono(const AudioBuffer& buffer) {
  if (buffer.num_channels() != 1) return buffer;
  return AudioBuffer::Stereo(buffer.sample_rate, buffer.channels[0],
                             buffer.channels[0]);
}

AudioBuffer ToMono(const AudioBuffer& buffer) {
  if (buffer.num_channels() == 1) return buffer;
  Signal mono(buffer.num_frames());
  for (std::size_t i = 0; i < mono.size(); ++i) {
    mono[i] = 0.5 * (buffer.channels[0][i] + buffer.channels[1][i]);
  }
  return AudioBuffer::Mono(buffer.sample_rate, std::move(mono));
}

}  // namespace spataudio
