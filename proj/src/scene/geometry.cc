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

#include "spataudio/scene/geometry.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spataudio/error.h"

namespace spataudio::scene {
namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

double Radians(double deg) { return deg / kDegPerRad; }

}  // namespace

void CameraModel::Validate() const {
  if (!(h_fov_deg > 0.0 && h_fov_deg < 180.0)) {
    throw ValidationError("h_fov_deg must be in (0, 180), got " +
                          std::to_string(h_fov_deg));
  }
  if (!(v_fov_deg > 0.0 && v_fov_deg < 180.0)) {
    throw ValidationError("v_fov_deg must be in (0, 180), got " +
                          std::to_string(v_fov_deg));
  }
  if (!(d_min_m > 0.0)) throw ValidationError("d_min_m must be positive");
  if (!(d_min_m < d_max_m)) {
    throw ValidationError("d_min_m must be smaller than d_max_m");
  }
  if (!(g_min < g_max)) throw ValidationError("g_min must be below g_max");
}

ImagePoint NormalizeCenter(double x_center, double y_center) {
  if (!(x_center >= 0.0 && x_center <= 1.0) ||
      !(y_center >= 0.0 && y_center <= 1.0)) {
    throw DomainError("detection centre (" + std::to_string(x_center) + ", " +
                      std::to_string(y_center) + ") outside [0, 1]");
  }
  return {2.0 * x_center - 1.0, 1.0 - 2.0 * y_center};
}

double DepthFromGray(double gray, const CameraModel& camera) {
  double g = gray;
  if (!(g >= camera.g_min && g <= camera.g_max)) {
    g = std::isnan(g) ? camera.g_min
                      : std::clamp(g, camera.g_min, camera.g_max);
    spdlog::warn("depth gray value {} outside [{}, {}]; clamped to {}", gray,
                 camera.g_min, camera.g_max, g);
  }
  if (g == camera.g_min) return camera.d_max_m;
  if (g == camera.g_max) return camera.d_min_m;
  return camera.d_max_m - (g - camera.g_min) *
                              (camera.d_max_m - camera.d_min_m) /
                              (camera.g_max - camera.g_min);
}

Direction ToDirection(const SpatialSample& sample,
                      const CameraModel& camera) {
  const double px =
      sample.x * sample.z * std::tan(Radians(camera.h_fov_deg) / 2.0);
  const double py =
      sample.y * sample.z * std::tan(Radians(camera.v_fov_deg) / 2.0);
  const double pz = sample.z;
  return {std::atan2(px, pz) * kDegPerRad,
          std::atan2(py, std::hypot(px, pz)) * kDegPerRad};
}

SpatialSample SampleFromDetection(const NormalizedDetection& detection,
                                  double fps, const CameraModel& camera) {
  if (!(fps > 0.0)) throw ValidationError("fps must be positive");
  if (detection.frame_index < 0) {
    throw ValidationError("frame index must be non-negative");
  }
  const ImagePoint p = NormalizeCenter(detection.x_center, detection.y_center);
  return {static_cast<double>(detection.frame_index) / fps, p.x, p.y,
          DepthFromGray(detection.gray, camera)};
}

SpatialSample TrajectoryAt(std::span<const SpatialSample> trajectory,
                           double t) {
  if (trajectory.empty()) {
    throw ConfigurationError("trajectory has no samples");
  }
  auto with_time = [t](SpatialSample s) {
    s.time = t;
    return s;
  };
  if (t <= trajectory.front().time) return with_time(trajectory.front());
  if (t >= trajectory.back().time) return with_time(trajectory.back());
  auto upper = std::upper_bound(
      trajectory.begin(), trajectory.end(), t,
      [](double v, const SpatialSample& s) { return v < s.time; });
  const SpatialSample& b = *upper;
  const SpatialSample& a = *(upper - 1);
  if (a.time == t) return with_time(a);
  const double u = (t - a.time) / (b.time - a.time);
  auto lerp = [u](double from, double to) { return from + u * (to - from); };
  return {t, lerp(a.x, b.x), lerp(a.y, b.y), lerp(a.z, b.z)};
}

}  // namespace spataudio::scene
