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

#ifndef SPATAUDIO_SCENE_SCENE_H_
#define SPATAUDIO_SCENE_SCENE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spataudio/scene/geometry.h"

namespace spataudio::scene {

struct SourceDescription {
  std::string id;
  // As written in the scene file; relative paths resolve against the scene
  // file's directory.
  std::string audio_path;
  Trajectory trajectory;

  bool operator==(const SourceDescription&) const = default;
};

// Immutable after parsing; safe to share between concurrent renders.
struct SceneDescription {
  double fps = 30.0;
  CameraModel camera;
  std::vector<SourceDescription> sources;

  bool operator==(const SceneDescription&) const = default;
};

// Scene file, UTF-8 JSON:
//
//   {"fps": 30,
//    "camera": {"h_fov_deg": 90, "v_fov_deg": 60, "d_min_m": 0.1,
//               "d_max_m": 5.0},
//    "sources": [
//      {"id": "spk1", "audio": "spk1.wav",
//       "detections": [{"frame": 0, "x_center": 0.5, "y_center": 0.5,
//                       "gray": 128}]},
//      {"id": "spk2", "audio": "spk2.wav",
//       "trajectory": [{"t": 0.0, "x": -1, "y": 0, "z": 1.0}]}]}
//
// Each source carries either detections or a trajectory. Detections become
// samples at t = frame / fps. Omitted camera fields take their defaults.
//
// Errors: malformed JSON is kParse with line and column; schema violations
// are kValidation naming the offending field path.
SceneDescription ParseScene(std::string_view document);

// Always emits the trajectory form.
std::string SerializeScene(const SceneDescription& scene);

// Checks the invariants ParseScene enforces: unique ids, non-empty
// trajectories with strictly increasing times, in-range coordinates.
void ValidateScene(const SceneDescription& scene);

SceneDescription LoadSceneFile(const std::filesystem::path& path);

// Tracker output consumed by scene-build:
//   {"fps": 30, "width": 1280, "height": 720,
//    "detections": [{"frame": 0, "track_id": "0", "x_center": 0.5,
//                    "y_center": 0.4, "gray": 200}]}
struct DetectionRecord {
  std::int64_t frame = 0;
  std::string track_id;
  double x_center = 0.0;
  double y_center = 0.0;
  double gray = 0.0;
};

struct TrackerOutput {
  double fps = 0.0;
  int width = 0;
  int height = 0;
  std::vector<DetectionRecord> detections;
};

TrackerOutput ParseTrackerOutput(std::string_view document);

// Groups records by track id and binds each track to its audio path.
// Tracks without a mapping are a kValidation error listing every unmapped
// id; so are mapped ids that never appear in the detections.
SceneDescription BuildScene(const TrackerOutput& tracks,
                            const std::map<std::string, std::string>& audio,
                            double fps, const CameraModel& camera);

}  // namespace spataudio::scene

#endif  // SPATAUDIO_SCENE_SCENE_H_
