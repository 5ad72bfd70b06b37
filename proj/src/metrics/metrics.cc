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

#include "spataudio/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>
#include "spataudio/audio/loudness.h"
#include "spataudio/audio/resample.h"
#include "spataudio/audio/wav.h"
#include "spataudio/dsp/signal_ops.h"
#include "spataudio/error.h"

namespace spataudio::metrics {
namespace {

void CheckPair(const AudioBuffer& a, const AudioBuffer& b) {
  if (a.num_channels() != 2 || b.num_channels() != 2) {
    throw Error(ErrorKind::kPrecondition, "distances need stereo inputs");
  }
  if (a.sample_rate != b.sample_rate) {
    throw Error(ErrorKind::kPrecondition,
                "sample rates differ: " + std::to_string(a.sample_rate) +
                    " vs " + std::to_string(b.sample_rate));
  }
  if (a.num_frames() != b.num_frames()) {
    throw Error(ErrorKind::kPrecondition,
                "lengths differ: " + std::to_string(a.num_frames()) + " vs " +
                    std::to_string(b.num_frames()));
  }
  if (a.num_frames() == 0) {
    throw Error(ErrorKind::kPrecondition, "inputs are empty");
  }
}

struct Prepared {
  AudioBuffer audio;
  double gain = 1.0;
};

Prepared Prepare(const AudioBuffer& input, const EvaluationConfig& config,
                 const char* role) {
  try {
    input.Validate();
    AudioBuffer resampled = Resample(input, config.sample_rate);
    const double gain = LoudnessNormalizationGain(resampled, config.target_lufs);
    return {ToDualMono(Scale(resampled, gain)), gain};
  } catch (const Error& e) {
    throw Error(ErrorKind::kEvaluation,
                std::string(role) + " cannot be evaluated: " + e.what());
  }
}

}  // namespace

double StftDistance(const AudioBuffer& reference, const AudioBuffer& predicted,
                    const dsp::StftParams& params) {
  CheckPair(reference, predicted);
  double total = 0.0;
  for (std::size_t c = 0; c < 2; ++c) {
    const dsp::Spectrogram a =
        dsp::Stft(reference.channels[c], params, reference.sample_rate);
    const dsp::Spectrogram b =
        dsp::Stft(predicted.channels[c], params, predicted.sample_rate);
    double sum = 0.0;
    for (std::size_t f = 0; f < a.num_frames(); ++f) {
      for (std::size_t k = 0; k < a.num_bins(); ++k) {
        sum += std::norm(a.frames[f][k] - b.frames[f][k]);
      }
    }
    total += std::sqrt(sum);
  }
  return total;
}

double EnvDistance(const AudioBuffer& reference, const AudioBuffer& predicted) {
  CheckPair(reference, predicted);
  double total = 0.0;
  for (std::size_t c = 0; c < 2; ++c) {
    const std::vector<double> a = dsp::Envelope(reference.channels[c]);
    const std::vector<double> b = dsp::Envelope(predicted.channels[c]);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      sum += d * d;
    }
    total += std::sqrt(sum);
  }
  return total;
}

MetricsReport Evaluate(const AudioBuffer& reference,
                       const AudioBuffer& predicted,
                       const EvaluationConfig& config) {
  Prepared ref = Prepare(reference, config, "reference");
  Prepared pred = Prepare(predicted, config, "predicted");
  const std::size_t n =
      std::min(ref.audio.num_frames(), pred.audio.num_frames());
  for (Signal& c : ref.audio.channels) c.resize(n);
  for (Signal& c : pred.audio.channels) c.resize(n);

  MetricsReport report;
  report.stft_distance = StftDistance(ref.audio, pred.audio, config.stft);
  report.env_distance = EnvDistance(ref.audio, pred.audio);
  report.preprocessing = {config.target_lufs, config.sample_rate, n,
                          ref.gain,           pred.gain,          config.stft};
  return report;
}

MetricsReport EvaluateFiles(const std::filesystem::path& reference,
                            const std::filesystem::path& predicted,
                            const EvaluationConfig& config) {
  auto load = [](const std::filesystem::path& p) {
    try {
      return ReadWavFile(p);
    } catch (const Error& e) {
      throw IoError(e.what());
    }
  };
  const AudioBuffer ref = load(reference);
  const AudioBuffer pred = load(predicted);
  return Evaluate(ref, pred, config);
}

std::string MetricsReport::ToJson() const {
  nlohmann::ordered_json j;
  j["stft_distance"] = stft_distance;
  j["env_distance"] = env_distance;
  j["preprocessing"] = {
      {"target_lufs", preprocessing.target_lufs},
      {"sample_rate", preprocessing.sample_rate},
      {"trim_length", preprocessing.trim_length},
      {"reference_gain", preprocessing.reference_gain},
      {"predicted_gain", preprocessing.predicted_gain},
      {"stft",
       {{"window_ms", preprocessing.stft.window_ms},
        {"hop_ms", preprocessing.stft.hop_ms},
        {"fft_size", preprocessing.stft.fft_size},
        {"window", "hann"}}}};
  return j.dump(2) + "\n";
}

}  // namespace spataudio::metrics
