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

#ifndef SPATAUDIO_SPATIAL_RENDER_CONFIG_H_
#define SPATAUDIO_SPATIAL_RENDER_CONFIG_H_

#include <optional>
#include <string_view>

#include "spataudio/dsp/stft.h"

namespace spataudio {

enum class RenderMethod { kAlgo3d, kHrtf };

enum class ClipPolicy { kPeakNormalize, kHardClip };

std::optional<RenderMethod> ParseRenderMethod(std::string_view name);
std::optional<ClipPolicy> ParseClipPolicy(std::string_view name);

struct RenderConfig {
  RenderMethod method = RenderMethod::kAlgo3d;
  int sample_rate = 16000;
  // Parameter update period in samples; must divide the STFT hop.
  int block = 160;
  // Echo tap level relative to the direct path.
  double alpha = 0.3;
  double speed_of_sound = 343.0;
  dsp::StftParams stft;
  double elevation_pivot_hz = 1000.0;
  double elevation_exponent = 1.5;
  ClipPolicy clip_policy = ClipPolicy::kPeakNormalize;
  // Distance range; d_max sizes the echo tail and delay history.
  double d_min_m = 0.1;
  double d_max_m = 5.0;

  // Throws kConfiguration on any violated invariant.
  void Validate() const;

  // Longest echo delay, round(d_max * fs / v).
  int MaxEchoDelaySamples() const;
};

}  // namespace spataudio

#endif  // SPATAUDIO_SPATIAL_RENDER_CONFIG_H_
