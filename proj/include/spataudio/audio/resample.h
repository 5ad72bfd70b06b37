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

#ifndef SPATAUDIO_AUDIO_RESAMPLE_H_
#define SPATAUDIO_AUDIO_RESAMPLE_H_

#include <cstddef>

#include "spataudio/audio/audio_buffer.h"

namespace spataudio {

struct ResamplerDesign {
  double kaiser_beta = 8.6;
  // Filter span counted in samples of the lower of the two rates.
  int taps_per_phase = 64;
  // Passband edge as a fraction of the lower rate.
  double cutoff_fraction = 0.45;
};

// Band-limited rational resampling with a Kaiser-windowed sinc polyphase
// filter. Output length is round(n * target / source). Equal rates return the
// input unchanged.
AudioBuffer Resample(const AudioBuffer& buffer, int target_rate,
                     const ResamplerDesign& design = {});

std::size_t ResampledLength(std::size_t input_length, int source_rate,
                            int target_rate);

}  // namespace spataudio

#endif  // SPATAUDIO_AUDIO_RESAMPLE_H_
