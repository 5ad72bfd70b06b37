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

#ifndef SPATAUDIO_METRICS_METRICS_H_
#define SPATAUDIO_METRICS_METRICS_H_

#include <cstddef>
#include <filesystem>
#include <string>

#include "spataudio/audio/audio_buffer.h"
#include "spataudio/dsp/stft.h"

namespace spataudio::metrics {

struct EvaluationConfig {
  int sample_rate = 16000;
  double target_lufs = -23.0;
  dsp::StftParams stft;
};

struct Preprocessing {
  double target_lufs = 0.0;
  int sample_rate = 0;
  std::size_t trim_length = 0;
  double reference_gain = 1.0;
  double predicted_gain = 1.0;
  dsp::StftParams stft;
};

struct MetricsReport {
  double stft_distance = 0.0;
  double env_distance = 0.0;
  Preprocessing preprocessing;

  // {"stft_distance": ..., "env_distance": ..., "preprocessing": {...}}
  std::string ToJson() const;
};

// Sum over channels of the Frobenius norm of the complex spectrogram
// difference. Inputs must be stereo with equal rate and length
// (kPrecondition otherwise).
double StftDistance(const AudioBuffer& reference, const AudioBuffer& predicted,
                    const dsp::StftParams& params = {});

// Sum over channels of the Euclidean norm of the analytic-envelope
// difference. Same preconditions as StftDistance.
double EnvDistance(const AudioBuffer& reference, const AudioBuffer& predicted);

// Each input independently: resample, loudness-normalize, mono to dual-mono.
// Both are then trimmed to the shorter length and scored. Silent or too
// short inputs are kEvaluation errors.
MetricsReport Evaluate(const AudioBuffer& reference,
                       const AudioBuffer& predicted,
                       const EvaluationConfig& config = {});

MetricsReport EvaluateFiles(const std::filesystem::path& reference,
                            const std::filesystem::path& predicted,
                            const EvaluationConfig& config = {});

}  // namespace spataudio::metrics

#endif  // SPATAUDIO_METRICS_METRICS_H_
