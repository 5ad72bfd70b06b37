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

#include "spataudio/spatial/spatializer_3d.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "spataudio/error.h"

namespace spataudio::algo3d {

StereoPair PanLeftRight(std::span<const double> mono, double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("pan position " + std::to_string(x) +
                      " outside [-1, 1]");
  }
  const double left_gain = (1.0 - x) / 2.0;
  const double right_gain = (1.0 + x) / 2.0;
  StereoPair out{Signal(mono.size()), Signal(mono.size())};
  for (std::size_t i = 0; i < mono.size(); ++i) {
    out.left[i] = mono[i] * left_gain;
    out.right[i] = mono[i] * right_gain;
  }
  return out;
}

double ElevationGain(double frequency_hz, double y, double pivot_hz,
                     double exponent) {
  if (y == 0.0) return 1.0;
  return std::max(0.0, 1.0 + y * std::pow(frequency_hz / pivot_hz, exponent));
}

AudioBuffer ElevationFilter(const AudioBuffer& stereo,
                            const std::function<double(double)>& y_at,
                            const dsp::StftParams& params, double pivot_hz,
                            double exponent) {
  stereo.Validate();
  if (stereo.num_channels() != 2) {
    throw ConfigurationError("elevation filter expects a stereo buffer");
  }
  AudioBuffer out;
  out.sample_rate = stereo.sample_rate;
  std::vector<double> gains;
  for (const Signal& channel : stereo.channels) {
    dsp::Spectrogram spec = dsp::Stft(channel, params, stereo.sample_rate);
    gains.resize(spec.num_bins());
    for (std::size_t f = 0; f < spec.num_frames(); ++f) {
      const double y = y_at(spec.FrameCenterSeconds(f));
      if (y == 0.0) continue;
      for (std::size_t k = 0; k < spec.num_bins(); ++k) {
        spec.frames[f][k] *= ElevationGain(spec.BinHz(k), y, pivot_hz, exponent);
      }
    }
    out.channels.push_back(dsp::Istft(spec));
  }
  return out;
}

DistanceEffect::DistanceEffect(int sample_rate, double alpha,
                               double speed_of_sound, double max_distance_m)
    : sample_rate_(sample_rate),
      alpha_(alpha),
      speed_of_sound_(speed_of_sound),
      capacity_(static_cast<std::size_t>(
          DelaySamples(max_distance_m, sample_rate, speed_of_sound))),
      history_(capacity_, 0.0) {}

int DistanceEffect::DelaySamples(double z, int sample_rate,
                                 double speed_of_sound) {
  return static_cast<int>(std::lround(z * sample_rate / speed_of_sound));
}

Signal DistanceEffect::Process(std::span<const double> block, double z) {
  if (!(z > 0.0)) {
    throw DomainError("distance must be positive, got " + std::to_string(z));
  }
  const auto delay = static_cast<std::size_t>(
      DelaySamples(z, sample_rate_, speed_of_sound_));
  if (delay > capacity_) {
    throw DomainError("distance " + std::to_string(z) +
                      " m exceeds the configured maximum");
  }
  Signal out(block.size());
  for (std::size_t n = 0; n < block.size(); ++n) {
    double delayed;
    if (n >= delay) {
      delayed = block[n - delay];
    } else {
      delayed = history_[capacity_ + n - delay];
    }
    out[n] = block[n] / z + alpha_ * delayed / z;
  }
  if (capacity_ > 0) {
    if (block.size() >= capacity_) {
      std::copy(block.end() - capacity_, block.end(), history_.begin());
    } else {
      std::shift_left(history_.begin(), history_.end(),
                      static_cast<std::ptrdiff_t>(block.size()));
      std::copy(block.begin(), block.end(), history_.end() - block.size());
    }
  }
  return out;
}

AudioBuffer RenderSource3d(const AudioBuffer& mono,
                           const scene::Trajectory& trajectory,
                           const RenderConfig& config) {
  config.Validate();
  mono.Validate();
  if (mono.num_channels() != 1) {
    throw ConfigurationError("3D renderer expects mono input, got " +
                             std::to_string(mono.num_channels()) +
                             " channels");
  }
  if (mono.sample_rate != config.sample_rate) {
    throw ConfigurationError("input rate " + std::to_string(mono.sample_rate) +
                             " Hz differs from render rate " +
                             std::to_string(config.sample_rate) + " Hz");
  }
  if (trajectory.empty()) {
    throw ConfigurationError("trajectory has no samples");
  }
  const double fs = config.sample_rate;
  const std::size_t block = static_cast<std::size_t>(config.block);
  const std::size_t length =
      mono.num_frames() + static_cast<std::size_t>(config.MaxEchoDelaySamples());
  Signal source = mono.channels[0];
  source.resize(length, 0.0);

  auto block_center = [&](std::size_t start, std::size_t len) {
    return (static_cast<double>(start) + 0.5 * static_cast<double>(len)) / fs;
  };

  // Left-right.
  AudioBuffer panned(config.sample_rate, {Signal(length), Signal(length)});
  for (std::size_t start = 0; start < length; start += block) {
    const std::size_t len = std::min(block, length - start);
    const double x =
        scene::TrajectoryAt(trajectory, block_center(start, len)).x;
    StereoPair p = PanLeftRight(std::span(source).subspan(start, len), x);
    std::copy(p.left.begin(), p.left.end(), panned.channels[0].begin() + start);
    std::copy(p.right.begin(), p.right.end(),
              panned.channels[1].begin() + start);
  }

  // Up-down.
  AudioBuffer elevated = ElevationFilter(
      panned,
      [&](double t) { return scene::TrajectoryAt(trajectory, t).y; },
      config.stft, config.elevation_pivot_hz, config.elevation_exponent);

  // Front-back.
  AudioBuffer out(config.sample_rate, {Signal(length), Signal(length)});
  for (std::size_t c = 0; c < 2; ++c) {
    DistanceEffect effect(config.sample_rate, config.alpha,
                          config.speed_of_sound, config.d_max_m);
    for (std::size_t start = 0; start < length; start += block) {
      const std::size_t len = std::min(block, length - start);
      const double z =
          scene::TrajectoryAt(trajectory, block_center(start, len)).z;
      Signal y = effect.Process(
          std::span(elevated.channels[c]).subspan(start, len), z);
      std::copy(y.begin(), y.end(), out.channels[c].begin() + start);
    }
  }
  return out;
}

}  // namespace spataudio::algo3d
