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

#include "spataudio/dsp/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "spataudio/error.h"

namespace spataudio::dsp {
namespace {

// FFTW's planner is not reentrant; execution of distinct plans is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

struct RealFft::Impl {
  double* real = nullptr;
  fftw_complex* spectrum = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  ~Impl() {
    std::lock_guard lock(PlannerMutex());
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
    fftw_free(real);
    fftw_free(spectrum);
  }
};

RealFft::RealFft(std::size_t size) : size_(size), impl_(new Impl) {
  if (size == 0) throw ConfigurationError("FFT size must be positive");
  const int n = static_cast<int>(size);
  std::lock_guard lock(PlannerMutex());
  impl_->real = fftw_alloc_real(size);
  impl_->spectrum = fftw_alloc_complex(size / 2 + 1);
  impl_->forward = fftw_plan_dft_r2c_1d(n, impl_->real, impl_->spectrum,
                                        FFTW_ESTIMATE);
  impl_->inverse = fftw_plan_dft_c2r_1d(n, impl_->spectrum, impl_->real,
                                        FFTW_ESTIMATE);
}

RealFft::~RealFft() = default;
RealFft::RealFft(RealFft&&) noexcept = default;
RealFft& RealFft::operator=(RealFft&&) noexcept = default;

void RealFft::Forward(std::span<const double> input, std::span<Complex> bins) {
  const std::size_t used = std::min(input.size(), size_);
  std::copy_n(input.begin(), used, impl_->real);
  std::fill(impl_->real + used, impl_->real + size_, 0.0);
  fftw_execute(impl_->forward);
  for (std::size_t k = 0; k < num_bins() && k < bins.size(); ++k) {
    bins[k] = Complex(impl_->spectrum[k][0], impl_->spectrum[k][1]);
  }
}

void RealFft::Inverse(std::span<const Complex> bins,
                      std::span<double> output) {
  for (std::size_t k = 0; k < num_bins(); ++k) {
    const Complex v = k < bins.size() ? bins[k] : Complex();
    impl_->spectrum[k][0] = v.real();
    impl_->spectrum[k][1] = v.imag();
  }
  // c2r destroys its input; the spectrum buffer is scratch here.
  fftw_execute(impl_->inverse);
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_ && i < output.size(); ++i) {
    output[i] = impl_->real[i] * scale;
  }
}

struct ComplexFft::Impl {
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  ~Impl() {
    std::lock_guard lock(PlannerMutex());
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
    fftw_free(in);
    fftw_free(out);
  }
};

ComplexFft::ComplexFft(std::size_t size) : size_(size), impl_(new Impl) {
  if (size == 0) throw ConfigurationError("FFT size must be positive");
  const int n = static_cast<int>(size);
  std::lock_guard lock(PlannerMutex());
  impl_->in = fftw_alloc_complex(size);
  impl_->out = fftw_alloc_complex(size);
  impl_->forward = fftw_plan_dft_1d(n, impl_->in, impl_->out, FFTW_FORWARD,
                                    FFTW_ESTIMATE);
  impl_->inverse = fftw_plan_dft_1d(n, impl_->in, impl_->out, FFTW_BACKWARD,
                                    FFTW_ESTIMATE);
}

ComplexFft::~ComplexFft() = default;

void ComplexFft::Forward(std::span<const Complex> input,
                         std::span<Complex> output) {
  for (std::size_t i = 0; i < size_; ++i) {
    const Complex v = i < input.size() ? input[i] : Complex();
    impl_->in[i][0] = v.real();
    impl_->in[i][1] = v.imag();
  }
  fftw_execute(impl_->forward);
  for (std::size_t i = 0; i < size_ && i < output.size(); ++i) {
    output[i] = Complex(impl_->out[i][0], impl_->out[i][1]);
  }
}

void ComplexFft::Inverse(std::span<const Complex> input,
                         std::span<Complex> output) {
  for (std::size_t i = 0; i < size_; ++i) {
    const Complex v = i < input.size() ? input[i] : Complex();
    impl_->in[i][0] = v.real();
    impl_->in[i][1] = v.imag();
  }
  fftw_execute(impl_->inverse);
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_ && i < output.size(); ++i) {
    output[i] = Complex(impl_->out[i][0], impl_->out[i][1]) * scale;
  }
}

std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace spataudio::dsp
