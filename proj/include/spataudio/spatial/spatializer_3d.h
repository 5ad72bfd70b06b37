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

#ifndef SPATAUDIO_SPATIAL_SPATIALIZER_3D_H_
#define SPATAUDIO_SPATIAL_SPATIALIZER_3D_H_

#include <functional>
#include <span>
#include <vector>

#include "spataudio/audio/audio_buffer.h"
#include "spataudio/dsp/stft.h"
#include "spataudio/scene/geometry.h"
#include "spataudio/spatial/render_config.h"

namespace spataudio::algo3d {

struct StereoPair {
  Signal left;
  Signal right;
};

// Linear pan: left = S (1 - x) / 2, right = S (1 + x) / 2.
// Throws kDomain for x outside [-1, 1].
StereoPair PanLeftRight(std::span<const double> mono, double x);

// max(0, 1 + y (f / pivot)^exponent). Negative gains would flip phase, so
// they are clamped to zero.
double ElevationGain(double frequency_hz, double y, double pivot_hz = 1000.0,
                     double exponent = 1.5);

// Scales every STFT bin of both channels by ElevationGain(bin_hz, y) with y
// evaluated at each frame's centre time, then resynthesizes. Both channels
// see identical gains.
AudioBuffer ElevationFilter(const AudioBuffer& stereo,
                            const std::function<double(double)>& y_at,
                            const dsp::StftParams& params,
                            double pivot_hz = 1000.0, double exponent = 1.5);

// Direct path plus one echo tap, both divided by the distance z:
//   out[n] = (in[n] + alpha * in[n - delay]) / z,  delay = round(z fs / v).
// Keeps the last max-delay input samples so the echo reads across block
// boundaries. One instance per channel per render.
class DistanceEffect {
 public:
  DistanceEffect(int sample_rate, double alpha, double speed_of_sound,
                 double max_distance_m);

  static int DelaySamples(double z, int sample_rate, double speed_of_sound);

  // Throws kDomain when z <= 0 or the delay exceeds the retained history.
  Signal Process(std::span<const double> block, double z);

 private:
  int sample_rate_;
  double alpha_;
  double speed_of_sound_;
  std::size_t capacity_;
  std::vector<double> history_;  // most recent sample last
};

// Pans per block, filters for elevation over the whole panned signal, then
// applies the distance effect per block and channel. Output length is the
// input length plus config.MaxEchoDelaySamples().
AudioBuffer RenderSource3d(const AudioBuffer& mono,
                           const scene::Trajectory& trajectory,
                           const RenderConfig& config);

}  // namespace spataudio::algo3d

#endif  // SPATAUDIO_SPATIAL_SPATIALIZER_3D_H_
