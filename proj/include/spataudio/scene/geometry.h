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

#ifndef SPATAUDIO_SCENE_GEOMETRY_H_
#define SPATAUDIO_SCENE_GEOMETRY_H_

#include <cstdint>
#include <span>
#include <vector>

namespace spataudio::scene {

// Pinhole camera plus the gray-value/depth mapping of the depth model.
struct CameraModel {
  double h_fov_deg = 90.0;
  double v_fov_deg = 60.0;
  double d_min_m = 0.1;
  double d_max_m = 5.0;
  double g_min = 0.0;
  double g_max = 255.0;

  // Throws kValidation on FOVs outside (0, 180), d_min <= 0,
  // d_min >= d_max or g_min >= g_max.
  void Validate() const;

  bool operator==(const CameraModel&) const = default;
};

// Bounding-box centre as a fraction of the frame, plus the depth-map gray
// value sampled there.
struct NormalizedDetection {
  std::int64_t frame_index = 0;
  double x_center = 0.0;
  double y_center = 0.0;
  double gray = 0.0;
};

// Listener-centred position. x is positive to the right and y positive
// upward, both dimensionless in [-1, 1]; z is the distance in metres.
struct SpatialSample {
  double time = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  bool operator==(const SpatialSample&) const = default;
};

using Trajectory = std::vector<SpatialSample>;

struct ImagePoint {
  double x = 0.0;
  double y = 0.0;
};

struct Direction {
  double azimuth_deg = 0.0;    // positive to the right
  double elevation_deg = 0.0;  // positive upward
};

// x = 2 * x_center - 1, y = 1 - 2 * y_center. Image rows grow downward, so y
// flips sign. Throws kDomain for inputs outside [0, 1].
ImagePoint NormalizeCenter(double x_center, double y_center);

// Linear gray-to-depth map: g_min lands on d_max (far), g_max on d_min
// (near). Out-of-range gray values are clamped with a logged warning.
double DepthFromGray(double gray, const CameraModel& camera);

// Projects (x, y) onto the image plane at depth z using the camera's FOV and
// returns the direction of that point.
Direction ToDirection(const SpatialSample& sample, const CameraModel& camera);

SpatialSample SampleFromDetection(const NormalizedDetection& detection,
                                  double fps, const CameraModel& camera);

// Piecewise-linear in x, y and z; clamps to the end samples outside the
// covered time range. The returned sample's time is `t`. Throws
// kConfiguration on an empty trajectory.
SpatialSample TrajectoryAt(std::span<const SpatialSample> trajectory,
                           double t);

}  // namespace spataudio::scene

#endif  // SPATAUDIO_SCENE_GEOMETRY_H_
