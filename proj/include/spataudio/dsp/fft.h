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

#ifndef SPATAUDIO_DSP_FFT_H_
#define SPATAUDIO_DSP_FFT_H_

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace spataudio::dsp {

using Complex = std::complex<double>;

// Real-input FFT of a fixed size backed by FFTW. Each instance owns its plans
// and buffers, so separate instances may run on separate threads. A single
// instance is not thread-safe.
class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return size_; }
  std::size_t num_bins() const { return size_ / 2 + 1; }

  // `input` may be shorter than size(); the rest is zero-padded.
  void Forward(std::span<const double> input, std::span<Complex> bins);
  // Scaled by 1/size() so Inverse(Forward(x)) == x.
  void Inverse(std::span<const Complex> bins, std::span<double> output);

 private:
  struct Impl;
  std::size_t size_;
  std::unique_ptr<Impl> impl_;
};

// Complex FFT of arbitrary size; Inverse is scaled by 1/size().
class ComplexFft {
 public:
  explicit ComplexFft(std::size_t size);
  ~ComplexFft();
  ComplexFft(const ComplexFft&) = delete;
  ComplexFft& operator=(const ComplexFft&) = delete;

  std::size_t size() const { return size_; }
  void Forward(std::span<const Complex> input, std::span<Complex> output);
  void Inverse(std::span<const Complex> input, std::span<Complex> output);

 private:
  struct Impl;
  std::size_t size_;
  std::unique_ptr<Impl> impl_;
};

std::size_t NextPowerOfTwo(std::size_t n);

}  // namespace spataudio::dsp

#endif  // SPATAUDIO_DSP_FFT_H_
