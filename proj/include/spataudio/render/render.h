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

#ifndef SPATAUDIO_RENDER_RENDER_H_
#define SPATAUDIO_RENDER_RENDER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>

#include "spataudio/audio/audio_buffer.h"
#include "spataudio/scene/scene.h"
#include "spataudio/spatial/render_config.h"
#include "spataudio/spatial/spatializer_hrtf.h"

namespace spataudio::render {

struct MixResult {
  AudioBuffer audio;
  double applied_gain = 1.0;
  std::size_t clipped_samples = 0;
};

// Sums stereo tracks sample-wise, zero-padding to the longest. Peak
// normalization scales by 1/peak only when the peak exceeds 1; hard clipping
// clamps to [-1, 1] and counts the samples it changed. Throws kValidation on
// an empty list and kConfiguration on mismatched rates.
MixResult MixDown(std::span<const AudioBuffer> tracks, ClipPolicy policy);

struct RenderResult {
  AudioBuffer audio;
  double applied_gain = 1.0;
  std::size_t clipped_samples = 0;
  std::map<std::string, double> per_source_peak;
};

// Renders already-decoded stems, one per scene source in declared order.
// Stems are downmixed to mono and resampled to the render rate first.
// Sources render concurrently; the mix is reduced in declared order so the
// result is bit-identical between runs.
RenderResult RenderLoadedScene(const scene::SceneDescription& scene,
                               std::span<const AudioBuffer> stems,
                               const RenderConfig& config,
                               const hrtf::HrirDataset* hrir);

// Reads each source's audio relative to `base_dir` and renders. An
// unreadable stem is a kIo error naming the source id. A missing dataset in
// HRTF mode is a kConfiguration error.
RenderResult RenderScene(const scene::SceneDescription& scene,
                         const RenderConfig& config,
                         const hrtf::HrirDataset* hrir,
                         const std::filesystem::path& base_dir);

}  // namespace spataudio::render

#endif  // SPATAUDIO_RENDER_RENDER_H_
