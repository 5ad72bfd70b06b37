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

#ifndef SPATAUDIO_SPATIAL_SPATIALIZER_HRTF_H_
#define SPATAUDIO_SPATIAL_SPATIALIZER_HRTF_H_

#include <cstddef>
#include <filesystem>
#include <string_view>
#include <vector>

#include "spataudio/audio/audio_buffer.h"
#include "spataudio/scene/geometry.h"
#include "spataudio/spatial/render_config.h"

namespace spataudio::hrtf {

// Azimuth is positive to the listener's right, matching scene::Direction.
struct HrirEntry {
  double azimuth_deg = 0.0;    // [-180, 180)
  double elevation_deg = 0.0;  // [-90, 90]
  Signal left_ir;
  Signal right_ir;
};

// Immutable after loading; shareable across renders.
struct HrirDataset {
  int sample_rate = 0;
  std::size_t ir_length = 0;
  std::vector<HrirEntry> entries;

  // Throws kValidation: empty set, unequal or empty IRs, duplicate
  // directions, angles out of range.
  void Validate() const;
};

// Wraps any azimuth into [-180, 180).
double WrapAzimuth(double azimuth_deg);

// Manifest, UTF-8 JSON, IR paths relative to `base_dir`:
//   {"sample_rate": 48000,
//    "entries": [{"az_deg": 0, "el_deg": 0, "left": "l.wav", "right": "r.wav"}]}
// IR files are mono WAV at the manifest rate. When `target_rate` is positive
// and differs, IRs are resampled to it. A missing file is a kIo error naming
// the entry.
HrirDataset LoadHrirDataset(std::string_view manifest,
                            const std::filesystem::path& base_dir,
                            int target_rate = 0);

HrirDataset LoadHrirManifestFile(const std::filesystem::path& manifest_path,
                                 int target_rate = 0);

// Index of the entry with the smallest great-circle angle to the query.
// Exact ties go to the smaller azimuth, then the smaller elevation.
std::size_t NearestHrirIndex(const HrirDataset& dataset, double azimuth_deg,
                             double elevation_deg);

const HrirEntry& NearestHrir(const HrirDataset& dataset, double azimuth_deg,
                             double elevation_deg);

// Block-wise binaural convolution. Every block selects the nearest HRIR for
// the direction at its centre time and is scaled by 1/z. When the selection
// changes, the block is rendered under both HRIRs (each with full input
// history) and crossfaded linearly across the block. Output length is
// input + ir_length - 1.
AudioBuffer RenderSourceHrtf(const AudioBuffer& mono,
                             const scene::Trajectory& trajectory,
                             const scene::CameraModel& camera,
                             const HrirDataset& dataset,
                             const RenderConfig& config);

}  // namespace spataudio::hrtf

#endif  // SPATAUDIO_SPATIAL_SPATIALIZER_HRTF_H_
