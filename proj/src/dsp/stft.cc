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

#include "spataudio/dsp/stft.h"

#include <cmath>
#include <numbers>
#include <string>

#include "spataudio/error.h"

namespace spataudio::dsp {
namespace {

constexpr double kEnvelopeFloor = 1e-8;

}  // namespace

int StftParams::WindowLength(int sample_rate) const {
  return static_cast<int>(std::lround(window_ms * sample_rate / 1000.0));
}

int StftParams::HopLength(int sample_rate) const {
  return static_cast<int>(std::lround(hop_ms * sample_rate / 1000.0));
}

void StftParams::Validate(int sample_rate) const {
  if (sample_rate <= 0) throw ConfigurationError("sample rate must be > 0");
  const int window = WindowLength(sample_rate);
  const int hop = HopLength(sample_rate);
  if (hop <= 0 || window <= 0) {
    throw ConfigurationError("STFT window and hop must be at least one sample");
  }
  if (hop > window) {
    throw ConfigurationError("STFT hop (" + std::to_string(hop) +
                             ") exceeds window (" + std::to_string(window) +
                             ")");
  }
  if (fft_size < window) {
    throw ConfigurationError("FFT size " + std::to_string(fft_size) +
                             " is shorter than the window of " +
                             std::to_string(window) + " samples");
  }
}

std::vector<double> PeriodicHann(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t i = 0; i < length; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / length);
  }
  return w;
}

std::size_t FullFrameCount(std::size_t length, std::size_t window,
                           std::size_t hop) {
  if (length < window) return 0;
  return 1 + (length - window) / hop;
}

std::size_t PaddedFrameCount(std::size_t length, std::size_t window,
                             std::size_t hop) {
  const std::size_t padded = length + 2 * (window / 2);
  if (padded <= window) return 1;
  return 1 + (padded - window + hop - 1) / hop;
}

Spectrogram Stft(std::span<const double> signal, const StftParams& params,
                 int sample_rate) {
  params.Validate(sample_rate);
  if (signal.empty()) throw ValidationError("STFT of an empty signal");
  Spectrogram spec;
  spec.sample_rate = sample_rate;
  spec.fft_size = params.fft_size;
  spec.hop = params.HopLength(sample_rate);
  spec.window_len = params.WindowLength(sample_rate);
  spec.signal_length = signal.size();

  const std::size_t window = spec.window_len;
  const std::size_t hop = spec.hop;
  const std::size_t pad = window / 2;
  const std::vector<double> hann = PeriodicHann(window);
  const std::size_t frames = PaddedFrameCount(signal.size(), window, hop);

  RealFft fft(params.fft_size);
  std::vector<double> segment(window);
  spec.frames.assign(frames, std::vector<Complex>(spec.num_bins()));
  for (std::size_t f = 0; f < frames; ++f) {
    // Padded index f * hop + i maps to signal index f * hop + i - pad.
    for (std::size_t i = 0; i < window; ++i) {
      const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(f * hop + i) -
                                 static_cast<std::ptrdiff_t>(pad);
      const double v =
          (src >= 0 && static_cast<std::size_t>(src) < signal.size())
              ? signal[src]
              : 0.0;
      segment[i] = v * hann[i];
    }
    fft.Forward(segment, spec.frames[f]);
  }
  return spec;
}

std::vector<double> Istft(const Spectrogram& spec) {
  if (spec.fft_size <= 0 || spec.window_len <= 0 || spec.hop <= 0 ||
      spec.window_len > spec.fft_size) {
    throw FormatError("spectrogram has inconsistent STFT parameters");
  }
  if (spec.signal_length > 0 &&
      spec.num_frames() !=
          PaddedFrameCount(spec.signal_length, spec.window_len, spec.hop)) {
    throw FormatError("spectrogram has " + std::to_string(spec.num_frames()) +
                      " frames for a signal of " +
                      std::to_string(spec.signal_length) + " samples");
  }
  for (const auto& frame : spec.frames) {
    if (frame.size() != spec.num_bins()) {
      throw FormatError("spectrogram frame has " +
                        std::to_string(frame.size()) + " bins, expected " +
                        std::to_string(spec.num_bins()));
    }
  }
  const std::size_t window = spec.window_len;
  const std::size_t hop = spec.hop;
  const std::size_t pad = window / 2;
  const std::vector<double> hann = PeriodicHann(window);
  const std::size_t padded_len =
      spec.frames.empty() ? 0 : (spec.num_frames() - 1) * hop + window;

  std::vector<double> acc(padded_len, 0.0);
  std::vector<double> norm(padded_len, 0.0);
  std::vector<double> time(spec.fft_size);
  RealFft fft(spec.fft_size);
  for (std::size_t f = 0; f < spec.num_frames(); ++f) {
    fft.Inverse(spec.frames[f], time);
    const std::size_t start = f * hop;
    for (std::size_t i = 0; i < window; ++i) {
      acc[start + i] += time[i] * hann[i];
      norm[start + i] += hann[i] * hann[i];
    }
  }

  std::vector<double> out(spec.signal_length, 0.0);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const std::size_t j = n + pad;
    if (j < padded_len && norm[j] > kEnvelopeFloor) out[n] = acc[j] / norm[j];
  }
  return out;
}

}  // namespace spataudio::dsp
