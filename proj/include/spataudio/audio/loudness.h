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

#ifndef SPATAUDIO_AUDIO_LOUDNESS_H_
#define SPATAUDIO_AUDIO_LOUDNESS_H_

#include <array>

#include "spataudio/audio/audio_buffer.h"

namespace spataudio {

// ITU-R BS.1770-4 integrated loudness.
//
// K-weighting is a high-shelf followed by a second-order high-pass. Both are
// derived from their analog prototypes and re-discretized with the bilinear
// transform for the buffer's own sample rate, which reproduces the published
// 48 kHz coefficients. Gating uses 400 ms blocks stepped by 100 ms, an
// absolute gate at -70 LUFS and a relative gate 10 LU below the mean of the
// blocks that pass the absolute gate. Left and right channels weigh 1.0.

struct Biquad {
  std::array<double, 3> b{};
  std::array<double, 3> a{};  // a[0] == 1
};

struct KWeighting {
  Biquad shelf;
  Biquad highpass;
};

KWeighting DesignKWeighting(int sample_rate);

inline constexpr double kLoudnessBlockSeconds = 0.4;
inline constexpr double kLoudnessStepSeconds = 0.1;
inline constexpr double kAbsoluteGateLufs = -70.0;
inline constexpr double kRelativeGateLu = -10.0;

// Returns -infinity when every block is gated out (e.g. digital silence).
// Throws kMeasurement when the buffer is shorter than one 400 ms block.
double MeasureLoudness(const AudioBuffer& buffer);

// Linear gain that brings the buffer to `target_lufs`. Throws kNormalization
// when the input loudness is not finite.
double LoudnessNormalizationGain(const AudioBuffer& buffer,
                                 double target_lufs);

AudioBuffer NormalizeLoudness(const AudioBuffer& buffer, double target_lufs);

AudioBuffer Scale(const AudioBuffer& buffer, double gain);

}  // namespace spataudio

#endif  // SPATAUDIO_AUDIO_LOUDNESS_H_
