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

#ifndef SPATAUDIO_DSP_STFT_H_
#define SPATAUDIO_DSP_STFT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "spataudio/dsp/fft.h"

namespace spataudio::dsp {

// Analysis parameters in milliseconds; converted to samples per rate.
// The window is a periodic Hann.
struct StftParams {
  double window_ms = 25.0;
  double hop_ms = 10.0;
  int fft_size = 512;

  int WindowLength(int sample_rate) const;
  int HopLength(int sample_rate) const;
  // Throws kConfiguration unless 0 < hop <= window <= fft_size at this rate.
  void Validate(int sample_rate) const;

  bool operator==(const StftParams&) const = default;
};

// Time-major grid of one-sided spectra. The analysed signal was padded with
// window_len / 2 zeros at the front, so frame i is centred on sample i * hop.
struct Spectrogram {
  int sample_rate = 0;
  int fft_size = 0;
  int hop = 0;
  int window_len = 0;
  std::size_t signal_length = 0;
  std::vector<std::vector<Complex>> frames;

  std::size_t num_frames() const { return frames.size(); }
  std::size_t num_bins() const {
    return static_cast<std::size_t>(fft_size) / 2 + 1;
  }
  double BinHz(std::size_t bin) const {
    return static_cast<double>(bin) * sample_rate / fft_size;
  }
  double FrameCenterSeconds(std::size_t frame) const {
    return static_cast<double>(frame) * hop / sample_rate;
  }
};

std::vector<double> PeriodicHann(std::size_t length);

// Frames that fit entirely inside an unpadded signal:
// 1 + floor((length - window) / hop), or 0 when length < window.
std::size_t FullFrameCount(std::size_t length, std::size_t window,
                           std::size_t hop);

// Frame count after centre padding; every input sample lies strictly inside
// at least one window.
std::size_t PaddedFrameCount(std::size_t length, std::size_t window,
                             std::size_t hop);

Spectrogram Stft(std::span<const double> signal, const StftParams& params,
                 int sample_rate);

// Weighted overlap-add with the analysis window as synthesis window,
// normalized by the summed squared window wherever that sum exceeds 1e-8.
// Returns signal_length samples.
std::vector<double> Istft(const Spectrogram& spec);

}  // namespace spataudio::dsp

#endif  // SPATAUDIO_DSP_STFT_H_
