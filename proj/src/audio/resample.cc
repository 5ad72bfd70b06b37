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

#include "spataudio/audio/resample.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "spataudio/error.h"

namespace spataudio {
namespace {

// Phase tables beyond this count are not precomputed; the kernel is evaluated
// per output sample instead.
constexpr std::int64_t kMaxTabulatedPhases = 4096;

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

class Kernel {
 public:
  Kernel(int source_rate, int target_rate, const ResamplerDesign& design)
      : beta_(design.kaiser_beta),
        i0_beta_(std::cyl_bessel_i(0.0, design.kaiser_beta)) {
    const double min_rate = std::min(source_rate, target_rate);
    // Normalized to the input rate, in cycles per input sample.
    cutoff_ = design.cutoff_fraction * min_rate / source_rate;
    const double stretch =
        std::max(1.0, static_cast<double>(source_rate) / target_rate);
    half_width_ = static_cast<int>(
        std::ceil(0.5 * design.taps_per_phase * stretch));
  }

  int half_width() const { return half_width_; }

  // Taps for input samples q - H + 1 .. q + H when the output lands at
  // q + frac. Normalized to unit DC gain.
  void Taps(double frac, std::vector<double>& taps) const {
    taps.resize(2 * half_width_);
    double sum = 0.0;
    for (int k = -half_width_ + 1; k <= half_width_; ++k) {
      const double u = k - frac;
      double w = 0.0;
      const double r = u / half_width_;
      if (std::abs(r) < 1.0) {
        w = std::cyl_bessel_i(0.0, beta_ * std::sqrt(1.0 - r * r)) / i0_beta_;
      }
      const double h = 2.0 * cutoff_ * Sinc(2.0 * cutoff_ * u) * w;
      taps[k + half_width_ - 1] = h;
      sum += h;
    }
    for (double& t : taps) t /= sum;
  }

 private:
  double beta_;
  double i0_beta_;
  double cutoff_ = 0.0;
  int half_width_ = 0;
};

}  // namespace

std::size_t ResampledLength(std::size_t input_length, int source_rate,
                            int target_rate) {
  return static_cast<std::size_t>(std::llround(
      static_cast<double>(input_length) * target_rate / source_rate));
}

AudioBuffer Resample(const AudioBuffer& buffer, int target_rate,
                     const ResamplerDesign& design) {
  if (target_rate <= 0) {
    throw ConfigurationError("target rate must be positive, got " +
                             std::to_string(target_rate));
  }
  buffer.Validate();
  if (buffer.sample_rate == target_rate) return buffer;

  const std::int64_t g = std::gcd(buffer.sample_rate, target_rate);
  const std::int64_t up = target_rate / g;
  const std::int64_t down = buffer.sample_rate / g;
  const Kernel kernel(buffer.sample_rate, target_rate, design);
  const int hw = kernel.half_width();
  const std::size_t n_in = buffer.num_frames();
  const std::size_t n_out =
      ResampledLength(n_in, buffer.sample_rate, target_rate);

  std::vector<std::vector<double>> table;
  if (up <= kMaxTabulatedPhases) {
    table.resize(static_cast<std::size_t>(up));
    for (std::int64_t p = 0; p < up; ++p) {
      kernel.Taps(static_cast<double>(p) / up, table[p]);
    }
  }

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.channels.assign(buffer.num_channels(), Signal(n_out, 0.0));
  std::vector<double> scratch;
  for (std::size_t m = 0; m < n_out; ++m) {
    const std::int64_t num = static_cast<std::int64_t>(m) * down;
    const std::int64_t q = num / up;
    const std::int64_t phase = num % up;
    const std::vector<double>* taps = nullptr;
    if (!table.empty()) {
      taps = &table[phase];
    } else {
      kernel.Taps(static_cast<double>(phase) / up, scratch);
      taps = &scratch;
    }
    const std::int64_t first = q - hw + 1;
    const std::int64_t lo = std::max<std::int64_t>(0, first);
    const std::int64_t hi =
        std::min<std::int64_t>(static_cast<std::int64_t>(n_in), q + hw + 1);
    for (std::size_t c = 0; c < buffer.num_channels(); ++c) {
      const Signal& x = buffer.channels[c];
      double acc = 0.0;
      for (std::int64_t i = lo; i < hi; ++i) acc += x[i] * (*taps)[i - first];
      out.channels[c][m] = acc;
    }
  }
  return out;
}

}  // namespace spataudio
