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

#include "spataudio/scene/scene.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>
#include "spataudio/error.h"
#include "spataudio/file_util.h"

namespace spataudio::scene {
namespace {

using nlohmann::json;

json ParseJson(std::string_view document, std::string_view what) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "parse error at line L, column C: ...".
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& Member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(path + "." + key + ": required field is missing");
  }
  return *it;
}

double Number(const json& obj, const char* key, const std::string& path) {
  const json& v = Member(obj, key, path);
  if (!v.is_number()) {
    throw ValidationError(path + "." + key + ": expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw ValidationError(path + "." + key + ": must be finite");
  }
  return d;
}

std::int64_t Integer(const json& obj, const char* key,
                     const std::string& path) {
  const json& v = Member(obj, key, path);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d)) {
      return static_cast<std::int64_t>(d);
    }
  }
  throw ValidationError(path + "." + key + ": expected an integer");
}

std::string String(const json& obj, const char* key, const std::string& path) {
  const json& v = Member(obj, key, path);
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (!v.is_string()) {
    throw ValidationError(path + "." + key + ": expected a string");
  }
  return v.get<std::string>();
}

std::string Index(const std::string& path, const char* key, std::size_t i) {
  return path + "." + key + "[" + std::to_string(i) + "]";
}

CameraModel ParseCamera(const json& root) {
  CameraModel camera;
  auto it = root.find("camera");
  if (it == root.end()) return camera;
  const json& c = *it;
  if (!c.is_object()) throw ValidationError("$.camera: expected an object");
  const std::string path = "$.camera";
  if (c.contains("h_fov_deg")) camera.h_fov_deg = Number(c, "h_fov_deg", path);
  if (c.contains("v_fov_deg")) camera.v_fov_deg = Number(c, "v_fov_deg", path);
  if (c.contains("d_min_m")) camera.d_min_m = Number(c, "d_min_m", path);
  if (c.contains("d_max_m")) camera.d_max_m = Number(c, "d_max_m", path);
  camera.Validate();
  return camera;
}

Trajectory TrajectoryFromDetections(const json& list, const std::string& path,
                                    double fps, const CameraModel& camera) {
  if (!list.is_array()) throw ValidationError(path + ": expected an array");
  std::vector<NormalizedDetection> detections;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    NormalizedDetection d;
    d.frame_index = Integer(list[i], "frame", p);
    d.x_center = Number(list[i], "x_center", p);
    d.y_center = Number(list[i], "y_center", p);
    d.gray = Number(list[i], "gray", p);
    if (d.frame_index < 0) throw ValidationError(p + ".frame: negative");
    if (d.x_center < 0.0 || d.x_center > 1.0) {
      throw ValidationError(p + ".x_center: outside [0, 1]");
    }
    if (d.y_center < 0.0 || d.y_center > 1.0) {
      throw ValidationError(p + ".y_center: outside [0, 1]");
    }
    detections.push_back(d);
  }
  std::stable_sort(detections.begin(), detections.end(),
                   [](const auto& a, const auto& b) {
                     return a.frame_index < b.frame_index;
                   });
  Trajectory out;
  for (std::size_t i = 0; i < detections.size(); ++i) {
    if (i > 0 && detections[i].frame_index == detections[i - 1].frame_index) {
      throw ValidationError(path + ": two detections for frame " +
                            std::to_string(detections[i].frame_index));
    }
    out.push_back(SampleFromDetection(detections[i], fps, camera));
  }
  return out;
}

Trajectory ParseTrajectory(const json& list, const std::string& path) {
  if (!list.is_array()) throw ValidationError(path + ": expected an array");
  Trajectory out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    out.push_back({Number(list[i], "t", p), Number(list[i], "x", p),
                   Number(list[i], "y", p), Number(list[i], "z", p)});
  }
  return out;
}

}  // namespace

void ValidateScene(const SceneDescription& scene) {
  if (!(scene.fps > 0.0) || !std::isfinite(scene.fps)) {
    throw ValidationError("$.fps: must be positive");
  }
  scene.camera.Validate();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < scene.sources.size(); ++i) {
    const SourceDescription& s = scene.sources[i];
    const std::string path = Index("$", "sources", i);
    if (s.id.empty()) throw ValidationError(path + ".id: empty");
    if (!ids.insert(s.id).second) {
      throw ValidationError(path + ".id: duplicate source id '" + s.id + "'");
    }
    if (s.audio_path.empty()) {
      throw ValidationError(path + ".audio: missing audio file reference for '" +
                            s.id + "'");
    }
    if (s.trajectory.empty()) {
      throw ValidationError(path + ": source '" + s.id +
                            "' has no trajectory points");
    }
    for (std::size_t k = 0; k < s.trajectory.size(); ++k) {
      const SpatialSample& p = s.trajectory[k];
      const std::string sp = Index(path, "trajectory", k);
      if (!(p.time >= 0.0)) throw ValidationError(sp + ".t: negative");
      if (k > 0 && !(p.time > s.trajectory[k - 1].time)) {
        throw ValidationError(sp + ".t: times must strictly increase");
      }
      if (!(p.x >= -1.0 && p.x <= 1.0)) {
        throw ValidationError(sp + ".x: outside [-1, 1]");
      }
      if (!(p.y >= -1.0 && p.y <= 1.0)) {
        throw ValidationError(sp + ".y: outside [-1, 1]");
      }
      if (!(p.z >= scene.camera.d_min_m && p.z <= scene.camera.d_max_m)) {
        throw ValidationError(sp + ".z: outside [d_min_m, d_max_m]");
      }
    }
  }
}

SceneDescription ParseScene(std::string_view document) {
  const json root = ParseJson(document, "scene");
  if (!root.is_object()) throw ValidationError("$: expected an object");
  SceneDescription scene;
  scene.fps = Number(root, "fps", "$");
  if (!(scene.fps > 0.0)) throw ValidationError("$.fps: must be positive");
  scene.camera = ParseCamera(root);

  const json& sources = Member(root, "sources", "$");
  if (!sources.is_array()) {
    throw ValidationError("$.sources: expected an array");
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const json& src = sources[i];
    const std::string path = Index("$", "sources", i);
    SourceDescription s;
    s.id = String(src, "id", path);
    if (!src.is_object() || !src.contains("audio")) {
      throw ValidationError(path + ".audio: missing audio file reference" +
                            (s.id.empty() ? "" : " for '" + s.id + "'"));
    }
    s.audio_path = String(src, "audio", path);
    const bool has_det = src.contains("detections");
    const bool has_traj = src.contains("trajectory");
    if (has_det == has_traj) {
      throw ValidationError(
          path + ": exactly one of 'detections' or 'trajectory' is required");
    }
    s.trajectory =
        has_det ? TrajectoryFromDetections(src["detections"],
                                           path + ".detections", scene.fps,
                                           scene.camera)
                : ParseTrajectory(src["trajectory"], path + ".trajectory");
    scene.sources.push_back(std::move(s));
  }
  ValidateScene(scene);
  return scene;
}

std::string SerializeScene(const SceneDescription& scene) {
  json root;
  root["fps"] = scene.fps;
  root["camera"] = {{"h_fov_deg", scene.camera.h_fov_deg},
                    {"v_fov_deg", scene.camera.v_fov_deg},
                    {"d_min_m", scene.camera.d_min_m},
                    {"d_max_m", scene.camera.d_max_m}};
  json sources = json::array();
  for (const SourceDescription& s : scene.sources) {
    json traj = json::array();
    for (const SpatialSample& p : s.trajectory) {
      traj.push_back({{"t", p.time}, {"x", p.x}, {"y", p.y}, {"z", p.z}});
    }
    sources.push_back(
        {{"id", s.id}, {"audio", s.audio_path}, {"trajectory", traj}});
  }
  root["sources"] = sources;
  return root.dump(2) + "\n";
}

SceneDescription LoadSceneFile(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()),
                              bytes.size());
  try {
    return ParseScene(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

TrackerOutput ParseTrackerOutput(std::string_view document) {
  const json root = ParseJson(document, "detections");
  if (!root.is_object()) throw ValidationError("$: expected an object");
  TrackerOutput out;
  if (root.contains("fps")) out.fps = Number(root, "fps", "$");
  if (root.contains("width")) out.width = static_cast<int>(Integer(root, "width", "$"));
  if (root.contains("height")) {
    out.height = static_cast<int>(Integer(root, "height", "$"));
  }
  const json& list = Member(root, "detections", "$");
  if (!list.is_array()) {
    throw ValidationError("$.detections: expected an array");
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = Index("$", "detections", i);
    DetectionRecord r;
    r.frame = Integer(list[i], "frame", p);
    r.track_id = String(list[i], "track_id", p);
    r.x_center = Number(list[i], "x_center", p);
    r.y_center = Number(list[i], "y_center", p);
    r.gray = Number(list[i], "gray", p);
    out.detections.push_back(std::move(r));
  }
  return out;
}

SceneDescription BuildScene(const TrackerOutput& tracks,
                            const std::map<std::string, std::string>& audio,
                            double fps, const CameraModel& camera) {
  camera.Validate();
  if (!(fps > 0.0)) throw ValidationError("fps must be positive");

  // Track ids in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::vector<NormalizedDetection>> by_track;
  for (const DetectionRecord& r : tracks.detections) {
    auto [it, inserted] = by_track.try_emplace(r.track_id);
    if (inserted) order.push_back(r.track_id);
    it->second.push_back({r.frame, r.x_center, r.y_center, r.gray});
  }

  std::string unmapped;
  for (const std::string& id : order) {
    if (!audio.contains(id)) unmapped += (unmapped.empty() ? "" : ", ") + id;
  }
  if (!unmapped.empty()) {
    throw ValidationError("detections with no audio mapping: " + unmapped);
  }
  std::string unused;
  for (const auto& [id, path] : audio) {
    if (!by_track.contains(id)) unused += (unused.empty() ? "" : ", ") + id;
  }
  if (!unused.empty()) {
    throw ValidationError("mapped ids with no detections: " + unused);
  }

  SceneDescription scene;
  scene.fps = fps;
  scene.camera = camera;
  for (const std::string& id : order) {
    auto& dets = by_track[id];
    std::stable_sort(dets.begin(), dets.end(), [](const auto& a, const auto& b) {
      return a.frame_index < b.frame_index;
    });
    SourceDescription s;
    s.id = id;
    s.audio_path = audio.at(id);
    for (std::size_t i = 0; i < dets.size(); ++i) {
      if (i > 0 && dets[i].frame_index == dets[i - 1].frame_index) {
        throw ValidationError("track '" + id + "' has two detections in frame " +
                              std::to_string(dets[i].frame_index));
      }
      try {
        s.trajectory.push_back(SampleFromDetection(dets[i], fps, camera));
      } catch (const Error& e) {
        throw ValidationError("track '" + id + "': " + e.what());
      }
    }
    scene.sources.push_back(std::move(s));
  }
  ValidateScene(scene);
  return scene;
}

}  // namespace spataudio::scene
