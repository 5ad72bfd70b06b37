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

#include "spataudio/dsp/signal_ops.h"

#include <cmath>

#include "spataudio/dsp/fft.h"
#include "spataudio/error.h"

namespace spataudio::dsp {

std::vector<double> Envelope(std::span<const double> signal) {
  if (signal.empty()) throw ValidationError("envelope of an empty signal");
  const std::size_t n = signal.size();
  RealFft real_fft(n);
  std::vector<Complex> half(real_fft.num_bins());
  real_fft.Forward(signal, half);

  // Keep DC (and Nyquist for even n), double positive frequencies, drop
  // negative ones.
  std::vector<Complex> analytic(n);
  analytic[0] = half[0];
  const std::size_t positive_end = (n + 1) / 2;
  for (std::size_t k = 1; k < positive_end; ++k) analytic[k] = 2.0 * half[k];
  if (n % 2 == 0) analytic[n / 2] = half[n / 2];

  ComplexFft complex_fft(n);
  std::vector<Complex> time(n);
  complex_fft.Inverse(analytic, time);
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(time[i]);
  return env;
}

std::vector<double> FftConvolve(std::span<const double> signal,
                                std::span<const double> ir) {
  if (signal.empty() || ir.empty()) {
    throw ValidationError("convolution operands must be non-empty");
  }
  const std::size_t out_len = signal.size() + ir.size() - 1;
  const std::size_t size = NextPowerOfTwo(out_len);
  RealFft fft(size);
  std::vector<Complex> a(fft.num_bins());
  std::vector<Complex> b(fft.num_bins());
  fft.Forward(signal, a);
  fft.Forward(ir, b);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] *= b[k];
  std::vector<double> out(size);
  fft.Inverse(a, out);
  out.resize(out_len);
  return out;
}

}  // namespace spataudio::dsp
