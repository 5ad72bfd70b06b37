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

#ifndef SPATAUDIO_DSP_SIGNAL_OPS_H_
#define SPATAUDIO_DSP_SIGNAL_OPS_H_

#include <span>
#include <vector>

namespace spataudio::dsp {

// Magnitude of the analytic signal, computed over the whole input with one
// FFT of the input's exact length.
std::vector<double> Envelope(std::span<const double> signal);

// Full linear convolution; result length is signal.size() + ir.size() - 1.
std::vector<double> FftConvolve(std::span<const double> signal,
                                std::span<const double> ir);

}  // namespace spataudio::dsp

#endif  // SPATAUDIO_DSP_SIGNAL_OPS_H_
