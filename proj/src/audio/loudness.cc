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

#include "spataudio/audio/loudness.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "spataudio/error.h"

namespace spataudio {
namespace {

// Analog prototype parameters of the BS.1770 pre-filter and RLB filter.
constexpr double kShelfFreq = 1681.974450955533;
constexpr double kShelfGainDb = 3.999843853973347;
constexpr double kShelfQ = 0.7071752369554196;
constexpr double kShelfBandExponent = 0.4996667741545416;
constexpr double kHighpassFreq = 38.13547087602444;
constexpr double kHighpassQ = 0.5003270373238773;

constexpr double kLoudnessOffset = -0.691;

Signal Filter(const Biquad& f, const Signal& x) {
  Signal y(x.size());
  double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double v = f.b[0] * x[n] + f.b[1] * x1 + f.b[2] * x2 -
                     f.a[1] * y1 - f.a[2] * y2;
    x2 = x1;
    x1 = x[n];
    y2 = y1;
    y1 = v;
    y[n] = v;
  }
  return y;
}

double BlockLoudness(double weighted_power) {
  return kLoudnessOffset + 10.0 * std::log10(weighted_power);
}

}  // namespace

KWeighting DesignKWeighting(int sample_rate) {
  KWeighting k;
  {
    const double kk = std::tan(std::numbers::pi * kShelfFreq / sample_rate);
    const double vh = std::pow(10.0, kShelfGainDb / 20.0);
    const double vb = std::pow(vh, kShelfBandExponent);
    const double a0 = 1.0 + kk / kShelfQ + kk * kk;
    k.shelf.b = {(vh + vb * kk / kShelfQ + kk * kk) / a0,
                 2.0 * (kk * kk - vh) / a0,
                 (vh - vb * kk / kShelfQ + kk * kk) / a0};
    k.shelf.a = {1.0, 2.0 * (kk * kk - 1.0) / a0,
                 (1.0 - kk / kShelfQ + kk * kk) / a0};
  }
  {
    const double kk =
        std::tan(std::numbers::pi * kHighpassFreq / sample_rate);
    const double a0 = 1.0 + kk / kHighpassQ + kk * kk;
    k.highpass.b = {1.0, -2.0, 1.0};
    k.highpass.a = {1.0, 2.0 * (kk * kk - 1.0) / a0,
                    (1.0 - kk / kHighpassQ + kk * kk) / a0};
  }
  return k;
}

double MeasureLoudness(const AudioBuffer& buffer) {
  buffer.Validate();
  const auto block = static_cast<std::size_t>(
      std::llround(kLoudnessBlockSeconds * buffer.sample_rate));
  const auto step = static_cast<std::size_t>(
      std::llround(kLoudnessStepSeconds * buffer.sample_rate));
  const std::size_t n = buffer.num_frames();
  if (n < block) {
    throw Error(ErrorKind::kMeasurement,
                "loudness needs at least 400 ms of audio, got " +
                    std::to_string(n) + " samples at " +
                    std::to_string(buffer.sample_rate) + " Hz");
  }
  const KWeighting kw = DesignKWeighting(buffer.sample_rate);
  const std::size_t num_blocks = (n - block) / step + 1;

  // Per-block power summed over channels (channel weights are all 1).
  std::vector<double> power(num_blocks, 0.0);
  for (const Signal& channel : buffer.channels) {
    const Signal weighted = Filter(kw.highpass, Filter(kw.shelf, channel));
    // Prefix sums of squares keep the overlapping blocks O(n).
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      prefix[i + 1] = prefix[i] + weighted[i] * weighted[i];
    }
    for (std::size_t j = 0; j < num_blocks; ++j) {
      const std::size_t start = j * step;
      power[j] += (prefix[start + block] - prefix[start]) / block;
    }
  }

  double sum = 0.0;
  std::size_t count = 0;
  for (double p : power) {
    if (p > 0.0 && BlockLoudness(p) > kAbsoluteGateLufs) {
      sum += p;
      ++count;
    }
  }
  if (count == 0) return -std::numeric_limits<double>::infinity();
  const double relative_gate = BlockLoudness(sum / count) + kRelativeGateLu;

  sum = 0.0;
  count = 0;
  for (double p : power) {
    if (p <= 0.0) continue;
    const double l = BlockLoudness(p);
    if (l > kAbsoluteGateLufs && l > relative_gate) {
      sum += p;
      ++count;
    }
  }
  if (count == 0) return -std::numeric_limits<double>::infinity();
  return BlockLoudness(sum / count);
}

AudioBuffer Scale(const AudioBuffer& buffer, double gain) {
  AudioBuffer out = buffer;
  for (Signal& c : out.channels) {
    for (double& v : c) v *= gain;
  }
  return out;
}

double LoudnessNormalizationGain(const AudioBuffer& buffer,
                                 double target_lufs) {
  const double measured = MeasureLoudness(buffer);
  if (!std::isfinite(measured)) {
    throw Error(ErrorKind::kNormalization,
                "cannot normalize loudness of silent or fully gated audio");
  }
  double gain = std::pow(10.0, (target_lufs - measured) / 20.0);
  // The absolute gate is not scale invariant, so a quiet signal can gain or
  // lose blocks after scaling. One correction step covers that case.
  const double after = MeasureLoudness(Scale(buffer, gain));
  if (std::isfinite(after) && std::abs(after - target_lufs) > 0.01) {
    gain *= std::pow(10.0, (target_lufs - after) / 20.0);
  }
  return gain;
}

AudioBuffer NormalizeLoudness(const AudioBuffer& buffer, double target_lufs) {
  return Scale(buffer, LoudnessNormalizationGain(buffer, target_lufs));
}

}  // namespace spataudio
