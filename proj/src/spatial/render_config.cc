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

#include "spataudio/spatial/render_config.h"

#include <cmath>
#include <string>

#include "spataudio/error.h"

namespace spataudio {

std::optional<RenderMethod> ParseRenderMethod(std::string_view name) {
  if (name == "algo3d") return RenderMethod::kAlgo3d;
  if (name == "hrtf") return RenderMethod::kHrtf;
  return std::nullopt;
}

std::optional<ClipPolicy> ParseClipPolicy(std::string_view name) {
  if (name == "normalize" || name == "peak_normalize") {
    return ClipPolicy::kPeakNormalize;
  }
  if (name == "hard" || name == "hard_clip") return ClipPolicy::kHardClip;
  return std::nullopt;
}

void RenderConfig::Validate() const {
  if (sample_rate <= 0) throw ConfigurationError("sample rate must be > 0");
  if (!(alpha >= 0.0)) throw ConfigurationError("alpha must be >= 0");
  if (!(speed_of_sound > 0.0)) {
    throw ConfigurationError("speed of sound must be > 0");
  }
  if (!(d_min_m > 0.0 && d_min_m < d_max_m)) {
    throw ConfigurationError("distance range must satisfy 0 < d_min < d_max");
  }
  stft.Validate(sample_rate);
  const int hop = stft.HopLength(sample_rate);
  if (block <= 0 || hop % block != 0) {
    throw ConfigurationError("block size " + std::to_string(block) +
                             " must divide the STFT hop of " +
                             std::to_string(hop) + " samples");
  }
  if (!(elevation_pivot_hz > 0.0)) {
    throw ConfigurationError("elevation pivot must be > 0");
  }
}

int RenderConfig::MaxEchoDelaySamples() const {
  return static_cast<int>(std::lround(d_max_m * sample_rate / speed_of_sound));
}

}  // namespace spataudio
