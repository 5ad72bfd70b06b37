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

#include "spataudio/spatial/spatializer_hrtf.h"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>
#include "spataudio/audio/resample.h"
#include "spataudio/audio/wav.h"
#include "spataudio/dsp/fft.h"
#include "spataudio/error.h"
#include "spataudio/file_util.h"

namespace spataudio::hrtf {
namespace {

using nlohmann::json;

std::array<double, 3> UnitVector(double azimuth_deg, double elevation_deg) {
  const double az = azimuth_deg * std::numbers::pi / 180.0;
  const double el = elevation_deg * std::numbers::pi / 180.0;
  return {std::sin(az) * std::cos(el), std::sin(el),
          std::cos(az) * std::cos(el)};
}

std::string Describe(std::size_t index, double az, double el) {
  std::ostringstream s;
  s << "entry " << index << " (az " << az << ", el " << el << ")";
  return s.str();
}

Signal LoadIr(const std::filesystem::path& path, int manifest_rate,
              const std::string& entry) {
  AudioBuffer ir;
  try {
    ir = ReadWavFile(path);
  } catch (const Error& e) {
    throw Error(e.kind(), entry + ": " + e.what());
  }
  if (ir.num_channels() != 1) {
    throw ValidationError(entry + ": IR file '" + path.string() +
                          "' is not mono");
  }
  if (ir.sample_rate != manifest_rate) {
    throw ValidationError(entry + ": IR file '" + path.string() + "' is " +
                          std::to_string(ir.sample_rate) +
                          " Hz, manifest says " +
                          std::to_string(manifest_rate) + " Hz");
  }
  return std::move(ir.channels[0]);
}

// Block-limited convolution with full input history (overlap-save). Each
// distinct entry's IR spectra are computed once per render.
class BlockConvolver {
 public:
  BlockConvolver(const HrirDataset& dataset, std::size_t block)
      : dataset_(dataset),
        ir_len_(dataset.ir_length),
        fft_(dsp::NextPowerOfTwo(dataset.ir_length - 1 + block)) {}

  // Writes `len` outputs for positions start..start+len-1 of the convolution
  // of `input` with the entry's IRs.
  void Render(std::span<const double> input, std::size_t start,
              std::size_t len, std::size_t entry, Signal& left,
              Signal& right) {
    const auto& spectra = Spectra(entry);
    const std::size_t seg_len = ir_len_ - 1 + len;
    segment_.assign(fft_.size(), 0.0);
    for (std::size_t i = 0; i < seg_len; ++i) {
      const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(start + i) -
                                 static_cast<std::ptrdiff_t>(ir_len_ - 1);
      if (src >= 0 && static_cast<std::size_t>(src) < input.size()) {
        segment_[i] = input[src];
      }
    }
    bins_.resize(fft_.num_bins());
    fft_.Forward(segment_, bins_);
    time_.resize(fft_.size());
    left.resize(len);
    right.resize(len);
    for (int side = 0; side < 2; ++side) {
      const std::vector<dsp::Complex>& h = side == 0 ? spectra.first
                                                     : spectra.second;
      product_.resize(bins_.size());
      for (std::size_t k = 0; k < bins_.size(); ++k) {
        product_[k] = bins_[k] * h[k];
      }
      fft_.Inverse(product_, time_);
      Signal& out = side == 0 ? left : right;
      for (std::size_t i = 0; i < len; ++i) out[i] = time_[ir_len_ - 1 + i];
    }
  }

 private:
  using SpectrumPair =
      std::pair<std::vector<dsp::Complex>, std::vector<dsp::Complex>>;

  const SpectrumPair& Spectra(std::size_t entry) {
    auto it = cache_.find(entry);
    if (it != cache_.end()) return it->second;
    SpectrumPair s{std::vector<dsp::Complex>(fft_.num_bins()),
                   std::vector<dsp::Complex>(fft_.num_bins())};
    fft_.Forward(dataset_.entries[entry].left_ir, s.first);
    fft_.Forward(dataset_.entries[entry].right_ir, s.second);
    return cache_.emplace(entry, std::move(s)).first->second;
  }

  const HrirDataset& dataset_;
  std::size_t ir_len_;
  dsp::RealFft fft_;
  std::map<std::size_t, SpectrumPair> cache_;
  std::vector<double> segment_;
  std::vector<double> time_;
  std::vector<dsp::Complex> bins_;
  std::vector<dsp::Complex> product_;
};

}  // namespace

double WrapAzimuth(double azimuth_deg) {
  double a = std::fmod(azimuth_deg + 180.0, 360.0);
  if (a < 0.0) a += 360.0;
  return a - 180.0;
}

void HrirDataset::Validate() const {
  if (entries.empty()) throw ValidationError("HRIR dataset has no entries");
  if (sample_rate <= 0) throw ValidationError("HRIR sample rate must be > 0");
  std::set<std::pair<double, double>> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const HrirEntry& e = entries[i];
    const std::string name = Describe(i, e.azimuth_deg, e.elevation_deg);
    if (!(e.azimuth_deg >= -180.0 && e.azimuth_deg < 180.0)) {
      throw ValidationError(name + ": azimuth outside [-180, 180)");
    }
    if (!(e.elevation_deg >= -90.0 && e.elevation_deg <= 90.0)) {
      throw ValidationError(name + ": elevation outside [-90, 90]");
    }
    if (e.left_ir.empty() || e.left_ir.size() != e.right_ir.size()) {
      throw ValidationError(name + ": left and right IRs must be non-empty "
                                   "and of equal length");
    }
    if (e.left_ir.size() != ir_length) {
      throw ValidationError(name + ": IR length " +
                            std::to_string(e.left_ir.size()) +
                            " differs from dataset length " +
                            std::to_string(ir_length));
    }
    if (!seen.emplace(e.azimuth_deg, e.elevation_deg).second) {
      throw ValidationError(name + ": duplicate direction");
    }
  }
}

HrirDataset LoadHrirDataset(std::string_view manifest,
                            const std::filesystem::path& base_dir,
                            int target_rate) {
  json root;
  try {
    root = json::parse(manifest.begin(), manifest.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("HRIR manifest: ") + e.what());
  }
  if (!root.is_object() || !root.contains("sample_rate") ||
      !root["sample_rate"].is_number_integer()) {
    throw ValidationError("HRIR manifest: integer 'sample_rate' is required");
  }
  if (!root.contains("entries") || !root["entries"].is_array()) {
    throw ValidationError("HRIR manifest: 'entries' array is required");
  }
  HrirDataset dataset;
  dataset.sample_rate = root["sample_rate"].get<int>();
  if (dataset.sample_rate <= 0) {
    throw ValidationError("HRIR manifest: sample_rate must be positive");
  }
  const json& list = root["entries"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& j = list[i];
    const std::string at = "HRIR manifest entries[" + std::to_string(i) + "]";
    for (const char* key : {"az_deg", "el_deg"}) {
      if (!j.is_object() || !j.contains(key) || !j[key].is_number()) {
        throw ValidationError(at + ": numeric '" + key + "' is required");
      }
    }
    for (const char* key : {"left", "right"}) {
      if (!j.contains(key) || !j[key].is_string()) {
        throw ValidationError(at + ": string '" + key + "' is required");
      }
    }
    HrirEntry e;
    e.azimuth_deg = WrapAzimuth(j["az_deg"].get<double>());
    e.elevation_deg = j["el_deg"].get<double>();
    const std::string name = Describe(i, e.azimuth_deg, e.elevation_deg);
    e.left_ir = LoadIr(base_dir / j["left"].get<std::string>(),
                       dataset.sample_rate, name);
    e.right_ir = LoadIr(base_dir / j["right"].get<std::string>(),
                        dataset.sample_rate, name);
    dataset.entries.push_back(std::move(e));
  }
  if (!dataset.entries.empty()) {
    dataset.ir_length = dataset.entries.front().left_ir.size();
  }
  dataset.Validate();

  if (target_rate > 0 && target_rate != dataset.sample_rate) {
    for (HrirEntry& e : dataset.entries) {
      AudioBuffer pair = Resample(
          AudioBuffer::Stereo(dataset.sample_rate, e.left_ir, e.right_ir),
          target_rate);
      e.left_ir = std::move(pair.channels[0]);
      e.right_ir = std::move(pair.channels[1]);
    }
    dataset.sample_rate = target_rate;
    dataset.ir_length = dataset.entries.front().left_ir.size();
    dataset.Validate();
  }
  return dataset;
}

HrirDataset LoadHrirManifestFile(const std::filesystem::path& manifest_path,
                                 int target_rate) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(manifest_path);
  return LoadHrirDataset(
      std::string_view(reinterpret_cast<const char*>(bytes.data()),
                       bytes.size()),
      manifest_path.parent_path(), target_rate);
}

std::size_t NearestHrirIndex(const HrirDataset& dataset, double azimuth_deg,
                             double elevation_deg) {
  if (dataset.entries.empty()) {
    throw ValidationError("HRIR dataset has no entries");
  }
  // Largest dot product between unit vectors is the smallest angle.
  const auto q = UnitVector(azimuth_deg, elevation_deg);
  std::size_t best = 0;
  double best_dot = -2.0;
  for (std::size_t i = 0; i < dataset.entries.size(); ++i) {
    const HrirEntry& e = dataset.entries[i];
    const auto v = UnitVector(e.azimuth_deg, e.elevation_deg);
    const double dot = q[0] * v[0] + q[1] * v[1] + q[2] * v[2];
    if (dot > best_dot) {
      best = i;
      best_dot = dot;
    } else if (dot == best_dot) {
      const HrirEntry& b = dataset.entries[best];
      if (e.azimuth_deg < b.azimuth_deg ||
          (e.azimuth_deg == b.azimuth_deg &&
           e.elevation_deg < b.elevation_deg)) {
        best = i;
      }
    }
  }
  return best;
}

const HrirEntry& NearestHrir(const HrirDataset& dataset, double azimuth_deg,
                             double elevation_deg) {
  return dataset.entries[NearestHrirIndex(dataset, azimuth_deg, elevation_deg)];
}

AudioBuffer RenderSourceHrtf(const AudioBuffer& mono,
                             const scene::Trajectory& trajectory,
                             const scene::CameraModel& camera,
                             const HrirDataset& dataset,
                             const RenderConfig& config) {
  config.Validate();
  mono.Validate();
  dataset.Validate();
  if (mono.num_channels() != 1) {
    throw ConfigurationError("HRTF renderer expects mono input");
  }
  if (mono.sample_rate != config.sample_rate ||
      dataset.sample_rate != config.sample_rate) {
    throw ConfigurationError(
        "rate mismatch: input " + std::to_string(mono.sample_rate) +
        " Hz, HRIR " + std::to_string(dataset.sample_rate) + " Hz, render " +
        std::to_string(config.sample_rate) + " Hz");
  }
  if (trajectory.empty()) throw ConfigurationError("trajectory has no samples");

  const double fs = config.sample_rate;
  const std::size_t block = static_cast<std::size_t>(config.block);
  const std::size_t in_len = mono.num_frames();
  const std::size_t out_len = in_len + dataset.ir_length - 1;

  // Distance gain is applied to the input so that each block's tail keeps the
  // gain it was rendered with.
  Signal scaled = mono.channels[0];
  scaled.resize(out_len, 0.0);
  std::vector<std::size_t> selection;
  for (std::size_t start = 0; start < out_len; start += block) {
    const std::size_t len = std::min(block, out_len - start);
    const double t = (static_cast<double>(start) + 0.5 * len) / fs;
    const scene::SpatialSample s = scene::TrajectoryAt(trajectory, t);
    if (!(s.z > 0.0)) throw DomainError("distance must be positive");
    for (std::size_t i = start; i < start + len; ++i) scaled[i] /= s.z;
    const scene::Direction d = scene::ToDirection(s, camera);
    selection.push_back(
        NearestHrirIndex(dataset, d.azimuth_deg, d.elevation_deg));
  }
  scaled.resize(in_len);

  AudioBuffer out(config.sample_rate, {Signal(out_len), Signal(out_len)});
  BlockConvolver conv(dataset, block);
  Signal left, right, prev_left, prev_right;
  for (std::size_t b = 0, start = 0; start < out_len; ++b, start += block) {
    const std::size_t len = std::min(block, out_len - start);
    conv.Render(scaled, start, len, selection[b], left, right);
    if (b > 0 && selection[b] != selection[b - 1]) {
      conv.Render(scaled, start, len, selection[b - 1], prev_left, prev_right);
      for (std::size_t i = 0; i < len; ++i) {
        const double r = static_cast<double>(i + 1) / len;
        left[i] = (1.0 - r) * prev_left[i] + r * left[i];
        right[i] = (1.0 - r) * prev_right[i] + r * right[i];
      }
    }
    std::copy(left.begin(), left.end(), out.channels[0].begin() + start);
    std::copy(right.begin(), right.end(), out.channels[1].begin() + start);
  }
  return out;
}

}  // namespace spataudio::hrtf
