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

#include "spataudio/render/render.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

#include "spataudio/audio/resample.h"
#include "spataudio/audio/wav.h"
#include "spataudio/error.h"
#include "spataudio/spatial/spatializer_3d.h"

namespace spataudio::render {

MixResult MixDown(std::span<const AudioBuffer> tracks, ClipPolicy policy) {
  if (tracks.empty()) throw ValidationError("nothing to mix");
  const int rate = tracks.front().sample_rate;
  std::size_t length = 0;
  for (const AudioBuffer& t : tracks) {
    if (t.sample_rate != rate) {
      throw ConfigurationError("cannot mix tracks at " + std::to_string(rate) +
                               " Hz and " + std::to_string(t.sample_rate) +
                               " Hz");
    }
    if (t.num_channels() != 2) {
      throw ConfigurationError("mix tracks must be stereo");
    }
    length = std::max(length, t.num_frames());
  }

  MixResult result;
  result.audio = AudioBuffer(rate, {Signal(length, 0.0), Signal(length, 0.0)});
  for (const AudioBuffer& t : tracks) {
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t i = 0; i < t.num_frames(); ++i) {
        result.audio.channels[c][i] += t.channels[c][i];
      }
    }
  }

  if (policy == ClipPolicy::kPeakNormalize) {
    const double peak = Peak(result.audio);
    if (peak > 1.0) {
      result.applied_gain = 1.0 / peak;
      for (Signal& c : result.audio.channels) {
        for (double& v : c) v *= result.applied_gain;
      }
    }
  } else {
    for (Signal& c : result.audio.channels) {
      for (double& v : c) {
        if (v > 1.0 || v < -1.0) {
          v = std::clamp(v, -1.0, 1.0);
          ++result.clipped_samples;
        }
      }
    }
  }
  return result;
}

RenderResult RenderLoadedScene(const scene::SceneDescription& scene,
                               std::span<const AudioBuffer> stems,
                               const RenderConfig& config,
                               const hrtf::HrirDataset* hrir) {
  config.Validate();
  if (scene.sources.empty()) {
    throw ValidationError("scene has no sources to render");
  }
  if (stems.size() != scene.sources.size()) {
    throw ValidationError("expected one stem per source");
  }
  if (config.method == RenderMethod::kHrtf && hrir == nullptr) {
    throw ConfigurationError("HRTF rendering requires an HRIR dataset");
  }

  RenderConfig source_config = config;
  source_config.d_min_m = scene.camera.d_min_m;
  source_config.d_max_m = scene.camera.d_max_m;

  auto render_one = [&](std::size_t i) {
    AudioBuffer mono = Resample(ToMono(stems[i]), config.sample_rate);
    const scene::Trajectory& traj = scene.sources[i].trajectory;
    if (config.method == RenderMethod::kAlgo3d) {
      return algo3d::RenderSource3d(mono, traj, source_config);
    }
    return hrtf::RenderSourceHrtf(mono, traj, scene.camera, *hrir,
                                  source_config);
  };

  std::vector<std::future<AudioBuffer>> pending;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    pending.push_back(std::async(std::launch::async, render_one, i));
  }
  std::vector<AudioBuffer> tracks;
  for (auto& f : pending) tracks.push_back(f.get());

  RenderResult result;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    result.per_source_peak[scene.sources[i].id] = Peak(tracks[i]);
  }
  MixResult mix = MixDown(tracks, config.clip_policy);
  result.audio = std::move(mix.audio);
  result.applied_gain = mix.applied_gain;
  result.clipped_samples = mix.clipped_samples;
  return result;
}

RenderResult RenderScene(const scene::SceneDescription& scene,
                         const RenderConfig& config,
                         const hrtf::HrirDataset* hrir,
                         const std::filesystem::path& base_dir) {
  if (scene.sources.empty()) {
    throw ValidationError("scene has no sources to render");
  }
  if (config.method == RenderMethod::kHrtf && hrir == nullptr) {
    throw ConfigurationError("HRTF rendering requires an HRIR dataset");
  }
  std::vector<AudioBuffer> stems;
  for (const scene::SourceDescription& s : scene.sources) {
    std::filesystem::path path(s.audio_path);
    if (path.is_relative()) path = base_dir / path;
    try {
      stems.push_back(ReadWavFile(path));
    } catch (const Error& e) {
      // Undecodable stems count as unreadable.
      throw IoError("source '" + s.id + "': " + e.what());
    }
  }
  return RenderLoadedScene(scene, stems, config, hrir);
}

}  // namespace spataudio::render
